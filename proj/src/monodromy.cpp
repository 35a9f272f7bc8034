#include "abelcov/monodromy.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "tables.hpp"

namespace abelcov {

ValidatedDatum::ValidatedDatum(AbelianGroup g, std::vector<Residues> theta,
                               std::vector<long long> local_orders, long long genus)
    : group_(std::move(g)), theta_(std::move(theta)), local_orders_(std::move(local_orders)),
      genus_(genus) {}

namespace {

// 2g - 2 = -2|G| + sum_i (|G|/d_i)(d_i - 1), base curve the line.
long long genus_from_local_orders(long long group_order, const std::vector<long long>& local) {
    long long acc = -2 * group_order;
    for (long long d : local) acc += (group_order / d) * (d - 1);
    if (acc % 2 != 0) throw std::logic_error("Riemann-Hurwitz sum is odd for zero-sum data");
    return acc / 2 + 1;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// <theta> = G iff theta spans G/pG for every prime p dividing |G|.
// Works at any group order, no closure needed.
bool generates(const AbelianGroup& g, const std::vector<Residues>& theta) {
    for (long long p : prime_divisors(g.order())) {
        std::vector<size_t> coords;
        for (size_t i = 0; i < g.cyclic_orders().size(); ++i)
            if (g.cyclic_orders()[i] % p == 0) coords.push_back(i);
        const size_t dim = coords.size();
        // Row reduce the theta images mod p; pivots keyed by lead column and
        // normalized to 1, applied in increasing lead order.
        std::map<size_t, std::vector<long long>> pivots;
        for (const Residues& th : theta) {
            if (pivots.size() == dim) break;
            std::vector<long long> row(dim);
            for (size_t j = 0; j < dim; ++j) row[j] = th[coords[j]] % p;
            for (const auto& [lead, prow] : pivots)
                if (row[lead] != 0) {
                    long long factor = row[lead];
                    for (size_t j = lead; j < dim; ++j)
                        row[j] = ((row[j] - factor * prow[j]) % p + p) % p;
                }
            size_t lead = 0;
            while (lead < dim && row[lead] == 0) ++lead;
            if (lead < dim) {
                long long inv = 1;
                for (long long t = 1; t < p; ++t)
                    if ((row[lead] * t) % p == 1) {
                        inv = t;
                        break;
                    }
                for (size_t j = lead; j < dim; ++j) row[j] = (row[j] * inv) % p;
                pivots.emplace(lead, std::move(row));
            }
        }
        if (pivots.size() < dim) return false;
    }
    return true;
}

} // namespace

ValidatedDatum validate_with_genus_gate(const MonodromyDatum& datum, bool genus_gate) {
    const AbelianGroup& g = datum.group;
    for (const Residues& th : datum.theta) g.check_element(th);
    for (size_t i = 0; i < datum.theta.size(); ++i)
        if (g.is_identity(datum.theta[i]))
            fail(Errc::identity_branch_element,
                 "theta[" + std::to_string(i) + "] is the identity");
    Residues sum = g.identity();
    for (const Residues& th : datum.theta) sum = g.add(sum, th);
    if (!g.is_identity(sum)) fail(Errc::monodromy_sum_nonzero, "sum of theta is nonzero");
    if (!generates(g, datum.theta)) fail(Errc::not_generating, "theta does not generate the group");
    if (datum.theta.size() < 4)
        fail(Errc::too_few_branch_points,
             "s = " + std::to_string(datum.theta.size()) + " < 4");

    std::vector<long long> local;
    local.reserve(datum.theta.size());
    for (const Residues& th : datum.theta) local.push_back(g.element_order(th));
    long long genus = genus_from_local_orders(g.order(), local);
    if (genus_gate && genus < 2)
        fail(Errc::genus_below_two, "genus " + std::to_string(genus) + " < 2");
    return ValidatedDatum(g, datum.theta, std::move(local), genus);
}

ValidatedDatum validate(const MonodromyDatum& datum) { return validate_with_genus_gate(datum, true); }

ValidatedDatum validate_any_genus(const MonodromyDatum& datum) {
    return validate_with_genus_gate(datum, false);
}

long long dim_family(const ValidatedDatum& datum) { return datum.branch_points() - 3; }

namespace {

// Smallest sorted image of the tuple under one code permutation, compared
// lexicographically against `current`; returns true when strictly smaller.
bool mapped_sorted_below(const std::vector<uint16_t>& perm, const std::vector<int32_t>& tuple,
                         const std::vector<int32_t>& current, std::vector<int32_t>& scratch) {
    scratch.clear();
    for (int32_t c : tuple) {
        int32_t m = perm[static_cast<size_t>(c)];
        auto pos = std::upper_bound(scratch.begin(), scratch.end(), m);
        scratch.insert(pos, m);
    }
    for (size_t i = 0; i < scratch.size(); ++i) {
        if (scratch[i] != current[i]) return scratch[i] < current[i];
    }
    return false;
}

std::vector<int32_t> canonical_codes(const detail::GroupTables& tables,
                                     std::vector<int32_t> codes) {
    std::sort(codes.begin(), codes.end());
    std::vector<int32_t> best = codes;
    std::vector<int32_t> scratch;
    scratch.reserve(codes.size());
    for (const auto& perm : tables.aut_perms)
        if (mapped_sorted_below(perm, codes, best, scratch)) best = scratch;
    return best;
}

} // namespace

ValidatedDatum canonical_form(const ValidatedDatum& datum) {
    const auto& tables = detail::group_tables(datum.group());
    std::vector<int32_t> codes;
    codes.reserve(datum.theta().size());
    for (const Residues& th : datum.theta())
        codes.push_back(static_cast<int32_t>(datum.group().code_of(th)));
    std::vector<int32_t> best = canonical_codes(tables, std::move(codes));
    std::vector<Residues> theta;
    theta.reserve(best.size());
    for (int32_t c : best) theta.push_back(datum.group().element_at(c));
    return validate_any_genus(MonodromyDatum{datum.group(), std::move(theta)});
}

namespace {

// Bit sets over element codes, one per (remaining slots, minimum code).
// reach(r, e) = sums realizable by r nondecreasing nonzero codes >= e.
class ReachTable {
  public:
    ReachTable(const detail::GroupTables& t, int slots) : n_(t.n), words_((n_ + 63) / 64) {
        sets_.assign(static_cast<size_t>(slots + 1) * static_cast<size_t>(n_ + 1) *
                         static_cast<size_t>(words_),
                     0);
        // r = 0: only the zero sum.
        for (long long e = 0; e <= n_; ++e) word(0, e)[0] |= 1ULL;
        for (int r = 1; r <= slots; ++r)
            for (long long e = n_ - 1; e >= 1; --e) {
                uint64_t* dst = word(r, e);
                const uint64_t* skip = word(r, e + 1);
                for (long long w = 0; w < words_; ++w) dst[w] = skip[w];
                const uint64_t* prev = word(r - 1, e);
                for (long long c = 0; c < n_; ++c)
                    if (prev[c >> 6] & (1ULL << (c & 63))) {
                        long long s = t.plus(static_cast<int32_t>(e), static_cast<int32_t>(c));
                        dst[s >> 6] |= 1ULL << (s & 63);
                    }
            }
    }

    bool reachable(int r, long long min_code, long long target) const {
        const uint64_t* w = word(r, min_code);
        return (w[target >> 6] & (1ULL << (target & 63))) != 0;
    }

  private:
    uint64_t* word(int r, long long e) {
        return sets_.data() +
               (static_cast<size_t>(r) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(e)) *
                   static_cast<size_t>(words_);
    }
    const uint64_t* word(int r, long long e) const {
        return sets_.data() +
               (static_cast<size_t>(r) * static_cast<size_t>(n_ + 1) + static_cast<size_t>(e)) *
                   static_cast<size_t>(words_);
    }

    long long n_;
    long long words_;
    std::vector<uint64_t> sets_;
};

bool generates_codes(const detail::GroupTables& t, const std::vector<int32_t>& codes) {
    std::vector<char> in(static_cast<size_t>(t.n), 0);
    std::vector<int32_t> queue;
    in[0] = 1;
    queue.push_back(0);
    for (size_t head = 0; head < queue.size(); ++head)
        for (int32_t c : codes) {
            int32_t next = t.plus(queue[head], c);
            if (!in[static_cast<size_t>(next)]) {
                in[static_cast<size_t>(next)] = 1;
                queue.push_back(next);
            }
        }
    return static_cast<long long>(queue.size()) == t.n;
}

struct Enumerator {
    const AbelianGroup& g;
    const detail::GroupTables& tables;
    const ReachTable& reach;
    int s;
    const std::function<void(const ValidatedDatum&)>& sink;

    std::vector<int32_t> tuple;
    std::vector<int32_t> scratch;
    // Prefix canonicity pruning is only profitable near the root.
    static constexpr int kPrefixPruneDepth = 3;

    bool prefix_can_be_canonical() {
        for (const auto& perm : tables.aut_perms)
            if (mapped_sorted_below(perm, tuple, tuple, scratch)) return false;
        return true;
    }

    void emit_if_canonical() {
        if (!generates_codes(tables, tuple)) return;
        for (const auto& perm : tables.aut_perms)
            if (mapped_sorted_below(perm, tuple, tuple, scratch)) return;
        std::vector<Residues> theta;
        theta.reserve(tuple.size());
        for (int32_t c : tuple) theta.push_back(g.element_at(c));
        sink(validate_any_genus(MonodromyDatum{g, std::move(theta)}));
    }

    void extend(int32_t min_code, int32_t partial_sum) {
        int depth = static_cast<int>(tuple.size());
        if (depth == s) {
            assert(partial_sum == 0);
            emit_if_canonical();
            return;
        }
        int remaining = s - depth;
        for (int32_t c = min_code; c < tables.n; ++c) {
            int32_t sum_after = tables.plus(partial_sum, c);
            if (!reach.reachable(remaining - 1, c, tables.neg[static_cast<size_t>(sum_after)]))
                continue;
            tuple.push_back(c);
            if (depth + 1 > kPrefixPruneDepth || prefix_can_be_canonical())
                extend(c, sum_after);
            tuple.pop_back();
        }
    }
};

} // namespace

void enumerate_data(const AbelianGroup& g, int s,
                    const std::function<void(const ValidatedDatum&)>& sink) {
    if (s < 4) fail(Errc::too_few_branch_points, "s = " + std::to_string(s) + " < 4");
    const auto& tables = detail::group_tables(g); // throws past the automorphism bounds
    ReachTable reach(tables, s);
    Enumerator en{g, tables, reach, s, sink, {}, {}};
    en.tuple.reserve(static_cast<size_t>(s));
    en.scratch.reserve(static_cast<size_t>(s));
    en.extend(1, 0);
}

std::vector<ValidatedDatum> enumerate_data(const AbelianGroup& g, int s) {
    std::vector<ValidatedDatum> out;
    enumerate_data(g, s, [&](const ValidatedDatum& d) { out.push_back(d); });
    return out;
}

} // namespace abelcov
