#ifndef ABELCOV_SRC_TABLES_HPP
#define ABELCOV_SRC_TABLES_HPP

#include <cstdint>
#include <vector>

#include "abelcov/group.hpp"

namespace abelcov::detail {

// Flat-table arithmetic is only built for groups small enough to enumerate;
// beyond this the automorphism bound is refused outright.
inline constexpr long long kMaxTableOrder = 2048;

std::vector<int32_t> build_add_table(const AbelianGroup& g);   // n*n, codes
std::vector<int32_t> build_neg_table(const AbelianGroup& g);   // n
std::vector<int32_t> build_order_table(const AbelianGroup& g); // n

// Code-level tables plus every automorphism as a permutation of codes.
// Memoized per cyclic-order shape; throws GroupTooLargeForAutEnumeration
// past the bounds.
struct GroupTables {
    long long n = 0;
    std::vector<int32_t> add;
    std::vector<int32_t> neg;
    std::vector<int32_t> ord;
    std::vector<std::vector<uint16_t>> aut_perms;

    int32_t plus(int32_t a, int32_t b) const {
        return add[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)];
    }
};

const GroupTables& group_tables(const AbelianGroup& g);

} // namespace abelcov::detail

#endif
