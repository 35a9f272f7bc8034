#ifndef ABELCOV_MONODROMY_HPP
#define ABELCOV_MONODROMY_HPP

#include <functional>
#include <vector>

#include "abelcov/group.hpp"

namespace abelcov {

// Raw monodromy datum for a Galois cover of the line: group G and the local
// monodromies theta_1..theta_s at the s branch points.
struct MonodromyDatum {
    AbelianGroup group;
    std::vector<Residues> theta;
};

// A datum whose invariants have been checked, with genus and local orders
// cached. Constructed only by validate()/enumerate_data().
class ValidatedDatum {
  public:
    const AbelianGroup& group() const noexcept { return group_; }
    const std::vector<Residues>& theta() const noexcept { return theta_; }
    int branch_points() const noexcept { return static_cast<int>(theta_.size()); }
    long long genus() const noexcept { return genus_; }
    const std::vector<long long>& local_orders() const noexcept { return local_orders_; }

  private:
    friend ValidatedDatum validate_with_genus_gate(const MonodromyDatum&, bool);
    ValidatedDatum(AbelianGroup g, std::vector<Residues> theta,
                   std::vector<long long> local_orders, long long genus);

    AbelianGroup group_;
    std::vector<Residues> theta_;
    std::vector<long long> local_orders_;
    long long genus_;
};

// Checks, in this order: element shapes, theta_i != 0, sum theta_i = 0,
// <theta> = G, s >= 4, genus >= 2. Throws the Error naming the first
// violated invariant.
ValidatedDatum validate(const MonodromyDatum& datum);

// Same checks minus the genus >= 2 gate. Enumeration emits classes of any
// genus; callers that classify must filter genus >= 2 themselves.
ValidatedDatum validate_any_genus(const MonodromyDatum& datum);

// Dimension of the corresponding family, s - 3.
long long dim_family(const ValidatedDatum& datum);

// Lexicographically least datum in the orbit under S_s x Aut(G), with
// elements ordered by residue-vector lex order. Orbit-invariant and
// idempotent. Requires automorphism enumeration for the group.
ValidatedDatum canonical_form(const ValidatedDatum& datum);

// Emit exactly one representative (its canonical form) per equivalence
// class of data with s branch points, in lexicographic order. Classes of
// genus < 2 are included; see validate_any_genus.
void enumerate_data(const AbelianGroup& g, int s,
                    const std::function<void(const ValidatedDatum&)>& sink);
std::vector<ValidatedDatum> enumerate_data(const AbelianGroup& g, int s);

} // namespace abelcov

#endif
