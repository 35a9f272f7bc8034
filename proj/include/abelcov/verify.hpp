#ifndef ABELCOV_VERIFY_HPP
#define ABELCOV_VERIFY_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "abelcov/classify.hpp"

namespace abelcov {

// One built-in reference family with every expected value frozen.
struct ReferenceFamily {
    std::string name;
    Residues group_orders;
    std::vector<Residues> theta;

    int s = 0;
    long long genus = 0;
    std::vector<long long> local_orders;
    long long dim_Z = 0;

    // (character exponents, expected multiplicity), one entry per character.
    std::vector<std::pair<Residues, long long>> multiplicities;

    std::vector<std::string> factor_displays; // delta-descending order
    long long dim_SG = 0;
    bool star = false;
    bool tutti = false;
    bool structure_check = false;
    std::set<long long> sf_dims_all;
    std::set<long long> sf_dims_feasible;
    long long min_feasible = 0;
    std::string verdict;
    std::string sf_vs_sg;
    std::string deciding_rule;
    // When nonempty: some witness for this dim must merge a class with this
    // display label.
    long long witness_dim = -1;
    std::string witness_factor;
};

const std::vector<ReferenceFamily>& reference_families();

// Runs every family through the full pipeline and compares against the
// frozen values; one PASS/FAIL line per family plus a summary line.
// Returns the process exit code (0 all passed, 1 otherwise).
int verify_families(const std::vector<ReferenceFamily>& families, std::ostream& out);
int verify_paper(std::ostream& out);

} // namespace abelcov

#endif
