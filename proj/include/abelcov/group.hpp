#ifndef ABELCOV_GROUP_HPP
#define ABELCOV_GROUP_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "abelcov/errors.hpp"

namespace abelcov {

// Exact rational arithmetic; multiplicities must come out as exact integers,
// floating point is forbidden throughout.
using Fraction = boost::rational<long long>;

// Reduce into [0, 1).
Fraction mod1(Fraction f);

// An element (or a character exponent vector) as componentwise residues.
using Residues = std::vector<long long>;

// Finite abelian group Z/n1 x ... x Z/nk, stored exactly as given; no
// invariant-factor normalization is performed.
class AbelianGroup {
  public:
    explicit AbelianGroup(Residues cyclic_orders);

    const Residues& cyclic_orders() const noexcept { return orders_; }
    long long order() const noexcept { return order_; }
    int rank() const noexcept { return static_cast<int>(orders_.size()); }

    Residues identity() const;
    bool is_identity(const Residues& x) const;

    // Componentwise reduction mod n_i; accepts negatives.
    Residues reduce(Residues x) const;
    // Throws ElementShapeMismatch unless x has rank() reduced components.
    void check_element(const Residues& x) const;

    Residues add(const Residues& a, const Residues& b) const;
    Residues negate(const Residues& x) const;
    // Least d >= 1 with d*x = 0; lcm over components of n_i / gcd(n_i, x_i).
    long long element_order(const Residues& x) const;

    // Mixed-radix code with the first component most significant, so code
    // order coincides with lexicographic order on residue vectors.
    long long code_of(const Residues& x) const;
    Residues element_at(long long code) const;

    bool same_shape(const AbelianGroup& other) const { return orders_ == other.orders_; }

  private:
    Residues orders_;
    long long order_;
};

// A character of G, identified by its exponent vector: evaluation on x is
// exp(2*pi*i * sum a_i x_i / n_i).
struct Character {
    Residues exponents;
};

// All |G| characters in code order; the trivial character comes first.
std::vector<Character> characters(const AbelianGroup& g);

Character conjugate(const AbelianGroup& g, const Character& chi);
bool is_self_conjugate(const AbelianGroup& g, const Character& chi);
Character mul(const AbelianGroup& g, const Character& a, const Character& b);

// Exact value of the fraction sum a_i x_i / n_i mod 1; the reduced
// denominator divides the order of x.
Fraction char_fraction(const AbelianGroup& g, const Character& chi, const Residues& x);

// An automorphism, stored by the images of the standard generators e_i.
// Well-definedness requires ord(image_i) | n_i; bijectivity is enforced at
// enumeration time.
struct Automorphism {
    std::vector<Residues> generator_images;

    Residues apply(const AbelianGroup& g, const Residues& x) const;
};

// Max group order admitted for automorphism enumeration. Defaults to 512;
// the SCANNER_MAX_GROUP_ORDER environment variable overrides it.
long long max_group_order_for_aut();

// Safety cap: enumeration aborts rather than materialize more than this
// many automorphisms (elementary abelian 2-groups explode combinatorially).
inline constexpr long long kMaxAutGroupSize = 2'000'000;

// The full automorphism group, memoized per cyclic-order shape. Identity
// first, the rest in lexicographic order of generator-image codes.
// Throws GroupTooLargeForAutEnumeration past the bounds above.
const std::vector<Automorphism>& automorphisms(const AbelianGroup& g);

} // namespace abelcov

#endif
