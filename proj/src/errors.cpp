#include "abelcov/errors.hpp"

namespace abelcov {

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::empty_group_spec: return "EmptyGroupSpec";
        case Errc::order_less_than_two: return "OrderLessThanTwo";
        case Errc::element_shape_mismatch: return "ElementShapeMismatch";
        case Errc::group_too_large_for_aut_enumeration: return "GroupTooLargeForAutEnumeration";
        case Errc::identity_branch_element: return "IdentityBranchElement";
        case Errc::monodromy_sum_nonzero: return "MonodromySumNonzero";
        case Errc::not_generating: return "NotGenerating";
        case Errc::too_few_branch_points: return "TooFewBranchPoints";
        case Errc::genus_below_two: return "GenusBelowTwo";
        case Errc::internal_non_integer_multiplicity: return "InternalNonIntegerMultiplicity";
        case Errc::unknown_format: return "UnknownFormat";
        case Errc::malformed_datum_json: return "MalformedDatumJson";
        case Errc::malformed_input: return "MalformedInput";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace abelcov
