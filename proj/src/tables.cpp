#include "tables.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace abelcov::detail {

std::vector<int32_t> build_add_table(const AbelianGroup& g) {
    const long long n = g.order();
    if (n > kMaxTableOrder)
        fail(Errc::group_too_large_for_aut_enumeration,
             "|G| = " + std::to_string(n) + " exceeds the table limit " +
                 std::to_string(kMaxTableOrder));
    const auto& orders = g.cyclic_orders();
    const size_t k = orders.size();
    std::vector<Residues> elems(static_cast<size_t>(n));
    for (long long c = 0; c < n; ++c) elems[static_cast<size_t>(c)] = g.element_at(c);
    std::vector<int32_t> add(static_cast<size_t>(n) * static_cast<size_t>(n));
    Residues sum(k);
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
            const Residues& ea = elems[static_cast<size_t>(a)];
            const Residues& eb = elems[static_cast<size_t>(b)];
            long long code = 0;
            for (size_t i = 0; i < k; ++i) {
                long long v = ea[i] + eb[i];
                if (v >= orders[i]) v -= orders[i];
                code = code * orders[i] + v;
            }
            add[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)] =
                static_cast<int32_t>(code);
        }
    return add;
}

std::vector<int32_t> build_neg_table(const AbelianGroup& g) {
    const long long n = g.order();
    std::vector<int32_t> neg(static_cast<size_t>(n));
    for (long long c = 0; c < n; ++c)
        neg[static_cast<size_t>(c)] = static_cast<int32_t>(g.code_of(g.negate(g.element_at(c))));
    return neg;
}

std::vector<int32_t> build_order_table(const AbelianGroup& g) {
    const long long n = g.order();
    std::vector<int32_t> ord(static_cast<size_t>(n));
    for (long long c = 0; c < n; ++c)
        ord[static_cast<size_t>(c)] = static_cast<int32_t>(g.element_order(g.element_at(c)));
    return ord;
}

const GroupTables& group_tables(const AbelianGroup& g) {
    static std::mutex mu;
    static std::map<Residues, std::unique_ptr<const GroupTables>> memo;

    // The bound is env-sensitive; enforce it before consulting the memo.
    const auto& auts = automorphisms(g);

    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(g.cyclic_orders());
    if (it != memo.end()) return *it->second;

    auto t = std::make_unique<GroupTables>();
    t->n = g.order();
    t->add = build_add_table(g);
    t->neg = build_neg_table(g);
    t->ord = build_order_table(g);
    t->aut_perms.reserve(auts.size());
    for (const auto& a : auts) {
        std::vector<uint16_t> perm(static_cast<size_t>(t->n));
        for (long long c = 0; c < t->n; ++c)
            perm[static_cast<size_t>(c)] =
                static_cast<uint16_t>(g.code_of(a.apply(g, g.element_at(c))));
        t->aut_perms.push_back(std::move(perm));
    }
    const GroupTables& ref = *t;
    memo.emplace(g.cyclic_orders(), std::unique_ptr<const GroupTables>(std::move(t)));
    return ref;
}

} // namespace abelcov::detail
