#ifndef ABELCOV_ERRORS_HPP
#define ABELCOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abelcov {

// Every invariant violation carries one of these codes; the CLI prints the
// code name verbatim so scripts can match on it.
enum class Errc {
    empty_group_spec,
    order_less_than_two,
    element_shape_mismatch,
    group_too_large_for_aut_enumeration,
    identity_branch_element,
    monodromy_sum_nonzero,
    not_generating,
    too_few_branch_points,
    genus_below_two,
    internal_non_integer_multiplicity,
    unknown_format,
    malformed_datum_json,
    malformed_input,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg);
    Errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

  private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

} // namespace abelcov

#endif
