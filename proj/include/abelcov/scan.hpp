#ifndef ABELCOV_SCAN_HPP
#define ABELCOV_SCAN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelcov/classify.hpp"
#include "abelcov/monodromy.hpp"

namespace abelcov {

// A bounded search over monodromy data: the listed groups crossed with a
// range of branch-point counts.
struct ScanJob {
    std::vector<Residues> group_specs;
    int s_lo = 4;
    int s_hi = 4;
    std::optional<long long> genus_max;
    Assertions assertions;
    int jobs = 1;
    std::string format = "csv"; // csv | json | md
};

struct ScanRow {
    Residues group_orders;
    int s = 0;
    std::vector<Residues> theta; // canonical representative
    long long genus = 0;
    long long dim_Z = 0;
    long long dim_SG = 0;
    bool star = false;
    Verdict verdict = Verdict::inconclusive;
    std::string factor_summary;
};

struct ScanResult {
    std::vector<ScanRow> rows;                  // sorted by (|G|, orders, s, theta)
    std::map<std::string, long long> verdict_counts;
    long long classes_skipped_low_genus = 0;    // genus < 2, never classified
    long long classes_skipped_genus_cap = 0;    // above --genus-max

    std::string summary_footer() const;
};

// Deterministic: the row set is independent of the worker count. Every row
// is re-checked against the profile oracles (m sum = genus, delta ledger).
ScanResult run_scan(const ScanJob& job);

// Bit-stable serialization of the rows in the order given.
// csv header: group,s,theta,genus,dim_Z,dim_SG,star,factors,verdict
std::string emit(const std::vector<ScanRow>& rows, const std::string& format);

// "6,2x2x2" style list, or "all:N" for all abelian groups of order <= N.
std::vector<Residues> parse_group_spec(const std::string& spec);

// One group per isomorphism class, as sorted prime-power factors, ordered by
// (order, factors).
std::vector<Residues> all_abelian_groups_up_to(long long max_order);

// Default scan cap on |G|; SCANNER_MAX_GROUP_ORDER overrides it.
long long max_group_order_for_scan();
inline constexpr int kMaxBranchPoints = 12;

} // namespace abelcov

#endif
