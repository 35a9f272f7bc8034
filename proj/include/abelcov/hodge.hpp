#ifndef ABELCOV_HODGE_HPP
#define ABELCOV_HODGE_HPP

#include <string>
#include <vector>

#include "abelcov/group.hpp"
#include "abelcov/monodromy.hpp"

namespace abelcov {

// Character decomposition of the space of holomorphic one-forms: chi -> m_chi,
// indexed by character code. m at the trivial character is 0 and the m sum to
// the genus.
class EigenspaceProfile {
  public:
    EigenspaceProfile(AbelianGroup g, std::vector<long long> m, long long genus);

    const AbelianGroup& group() const noexcept { return group_; }
    long long genus() const noexcept { return genus_; }
    const std::vector<long long>& m() const noexcept { return m_; }
    long long m_at(long long char_code) const { return m_.at(static_cast<size_t>(char_code)); }
    long long m_of(const Character& chi) const;

  private:
    AbelianGroup group_;
    std::vector<long long> m_;
    long long genus_;
};

// m_chi = -1 + sum_i <chi(theta_i)> for nontrivial chi, 0 for the trivial
// one. Throws InternalNonIntegerMultiplicity if the arithmetic ever yields a
// non-integer or negative value (unreachable on validated data).
EigenspaceProfile eigenspace_multiplicities(const ValidatedDatum& datum);

namespace detail {
// Multiplicity formula without the validity net, for fault-injection tests.
long long raw_multiplicity(const AbelianGroup& g, const Character& chi,
                           const std::vector<Residues>& theta);
}

// One noncompact simple factor of the centralizer decomposition.
// ComplexPair{p,q} is SU(p,q) with p <= q, p >= 1 (one unordered conjugate
// pair of characters); Symplectic{m} is Sp(2m,R) (one self-conjugate
// character with m >= 1).
struct FactorLabel {
    enum class Kind { complex_pair, symplectic };

    Kind kind;
    long long p; // complex_pair: min multiplicity; symplectic: m
    long long q; // complex_pair: max multiplicity; symplectic: m

    static FactorLabel complex_pair(long long p, long long q);
    static FactorLabel symplectic(long long m);

    // Symmetric-space dimension: p*q for SU(p,q), m(m+1)/2 for Sp(2m,R).
    long long delta() const;
    // "SU(p,q)" or "Sp<2m>"; Symplectic{1} prints as SU(1,1).
    std::string display() const;
};

long long delta(const FactorLabel& label);

// Which symplectic factors are identified with complex pairs when comparing
// labels. The default identifies only Sp(2,R) = SU(1,1); identify_all also
// treats Sp(2m,R) as SU(m,m) for m >= 2.
enum class SpSuMode { identify_m1_only, identify_all };

FactorLabel normalized(const FactorLabel& label, SpSuMode mode);
bool label_equal(const FactorLabel& a, const FactorLabel& b,
                 SpSuMode mode = SpSuMode::identify_m1_only);
// Total order on normalized labels (delta desc, then display asc); used for
// canonical multiset storage.
bool label_before(const FactorLabel& a, const FactorLabel& b);

// Multiset of noncompact factor labels, one entry per real representation
// class carrying a noncompact factor. Stored sorted by label_before.
class FactorMultiset {
  public:
    FactorMultiset() = default;
    explicit FactorMultiset(std::vector<FactorLabel> labels);

    const std::vector<FactorLabel>& labels() const noexcept { return labels_; }
    bool empty() const noexcept { return labels_.empty(); }
    size_t size() const noexcept { return labels_.size(); }

    // "SU(1,2)+SU(1,1)" style, in stored (delta-descending) order.
    std::string summary() const;

  private:
    std::vector<FactorLabel> labels_;
};

bool multiset_equal(const FactorMultiset& a, const FactorMultiset& b,
                    SpSuMode mode = SpSuMode::identify_m1_only);

// Distinct label classes of a multiset under the given mode, in stored order.
struct FactorClass {
    FactorLabel label; // representative (first occurrence)
    int count;
    long long delta;
};
std::vector<FactorClass> factor_classes(const FactorMultiset& fm, SpSuMode mode);

// chi-classes contributing no noncompact factor, kept for reporting.
struct CompactPairInfo {
    Character chi;
    Character chi_bar;
    long long m_chi;
    long long m_chi_bar;
    bool self_conjugate;
};

struct FactorAnalysis {
    FactorMultiset noncompact;
    std::vector<CompactPairInfo> compact;
};

FactorMultiset factors(const EigenspaceProfile& profile);
FactorAnalysis factor_analysis(const EigenspaceProfile& profile);

// Dimension of the symmetric space attached to the full centralizer: sum of
// delta over the multiset.
long long dim_SG(const FactorMultiset& fm);

// Independent route to the same number via invariants of the symmetric
// square: sum over self-conjugate chi of m(m+1)/2 plus sum over unordered
// pairs of m_chi * m_chibar.
long long dim_sym_square_invariants(const EigenspaceProfile& profile);

// m_chi + m_chibar; equals -2 + #{i : chi(theta_i) != 0} on validated data.
long long conjugation_pair_sum(const EigenspaceProfile& profile, const Character& chi);

} // namespace abelcov

#endif
