#ifndef ABELCOV_CLASSIFY_HPP
#define ABELCOV_CLASSIFY_HPP

#include <set>
#include <string>
#include <vector>

#include "abelcov/hodge.hpp"
#include "abelcov/monodromy.hpp"

namespace abelcov {

enum class Verdict { special, not_special, inconclusive };
enum class SfVsSg { equal, strictly_smaller_possible, unknown };

const char* to_string(Verdict v) noexcept;            // SPECIAL / NOT_SPECIAL / INCONCLUSIVE
const char* to_string(SfVsSg v) noexcept;             // EQUAL / STRICTLY_SMALLER_POSSIBLE / UNKNOWN

// External hypotheses the tool cannot derive from the datum.
struct Assertions {
    bool totally_decomposable = false;
};

// True iff dim Z = dim S(G), i.e. s - 3 equals the delta sum.
bool star_condition(const ValidatedDatum& datum);
bool star_condition(const ValidatedDatum& datum, const EigenspaceProfile& profile);

// True iff all noncompact factor labels are pairwise unequal under the mode.
bool tutti_diversi(const FactorMultiset& fm, SpSuMode mode = SpSuMode::identify_m1_only);

// Necessary factor shape for a special totally decomposable family: every
// noncompact factor equals SU(1,1).
bool decomposable_structure_check(const FactorMultiset& fm);

// Dimension of the uniformizing orbit of a special totally decomposable
// family: r moving elliptic factors contribute one dimension each, fixed CM
// factors contribute none.
long long expected_special_dim_decomposable(long long moving_factors, long long cm_factors);

// Candidate dimensions for the smallest special subvariety containing the
// family: sum over distinct label classes c of b_c * delta_c where
// 1 <= b_c <= count_c (b_c = number of blocks after identifying equal
// factors pairwise along isometry graphs). `feasible` is `all` intersected
// with [dim_Z, inf).
struct SfDims {
    std::set<long long> all;
    std::set<long long> feasible;
};
SfDims possible_sf_dims(const FactorMultiset& fm, long long dim_Z,
                        SpSuMode mode = SpSuMode::identify_m1_only);

// One way of realizing a candidate dimension: the classes merged below their
// full block count.
struct MergedClass {
    std::string factor; // display label of the class
    int blocks;         // b_c
    int count;          // k_c
};
struct DimWitness {
    long long dim;
    std::vector<std::vector<MergedClass>> options;
};
// Witnesses for every candidate dimension strictly below dim S(G).
std::vector<DimWitness> sf_dim_witnesses(const FactorMultiset& fm,
                                         SpSuMode mode = SpSuMode::identify_m1_only);

struct ClassificationReport {
    long long s = 0;
    long long genus = 0;
    long long dim_Z = 0;
    long long dim_SG = 0;
    bool star = false;
    EigenspaceProfile profile;
    FactorAnalysis factors;
    SfDims sf_dims;
    std::vector<DimWitness> witnesses;
    Verdict verdict = Verdict::inconclusive;
    SfVsSg sf_vs_sg = SfVsSg::unknown;
    std::vector<std::string> applied_rules;    // rules visited, deciding rule last
    std::vector<std::string> assertions_used;
    std::vector<std::string> warnings;
};

// Decision procedure; rules tried in order, first match decides:
//   R1 star-sufficiency          star holds           -> SPECIAL, EQUAL
//   R2 tutti-diversi             all labels distinct  -> NOT_SPECIAL, EQUAL
//   R3 dimension-exclusion       dim_Z not a candidate-> NOT_SPECIAL,
//                                EQUAL iff feasible == {dim_SG}, else UNKNOWN
//   R4 theorem-a                 totally_decomposable asserted and factor
//                                shape check passes   -> verdict by star
//   R5 fallthrough               INCONCLUSIVE, STRICTLY_SMALLER_POSSIBLE when
//                                dim_Z is feasible and below dim_SG
// A totally_decomposable assertion contradicting the factor shape is recorded
// as an InvalidAssertion warning and R4 is skipped.
ClassificationReport classify(const ValidatedDatum& datum, const Assertions& assertions = {},
                              SpSuMode mode = SpSuMode::identify_m1_only);

} // namespace abelcov

#endif
