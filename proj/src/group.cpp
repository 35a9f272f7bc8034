#include "abelcov/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "tables.hpp"

namespace abelcov {

Fraction mod1(Fraction f) {
    // boost::rational keeps den > 0; shift the numerator into [0, den).
    long long n = f.numerator(), d = f.denominator();
    long long r = n % d;
    if (r < 0) r += d;
    return {r, d};
}

AbelianGroup::AbelianGroup(Residues cyclic_orders) : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) fail(Errc::empty_group_spec, "a group needs at least one cyclic factor");
    order_ = 1;
    for (long long n : orders_) {
        if (n < 2) fail(Errc::order_less_than_two, "cyclic factor " + std::to_string(n) + " < 2");
        if (order_ > (1LL << 62) / n) fail(Errc::malformed_input, "group order overflows");
        order_ *= n;
    }
}

Residues AbelianGroup::identity() const { return Residues(orders_.size(), 0); }

bool AbelianGroup::is_identity(const Residues& x) const {
    return std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
}

Residues AbelianGroup::reduce(Residues x) const {
    if (x.size() != orders_.size())
        fail(Errc::element_shape_mismatch,
             "element has " + std::to_string(x.size()) + " components, group has rank " +
                 std::to_string(orders_.size()));
    for (size_t i = 0; i < x.size(); ++i) {
        long long n = orders_[i];
        long long r = x[i] % n;
        if (r < 0) r += n;
        x[i] = r;
    }
    return x;
}

void AbelianGroup::check_element(const Residues& x) const {
    if (x.size() != orders_.size())
        fail(Errc::element_shape_mismatch,
             "element has " + std::to_string(x.size()) + " components, group has rank " +
                 std::to_string(orders_.size()));
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || x[i] >= orders_[i])
            fail(Errc::element_shape_mismatch,
                 "residue " + std::to_string(x[i]) + " out of range for Z/" +
                     std::to_string(orders_[i]));
}

Residues AbelianGroup::add(const Residues& a, const Residues& b) const {
    check_element(a);
    check_element(b);
    Residues out(orders_.size());
    for (size_t i = 0; i < out.size(); ++i) {
        long long v = a[i] + b[i];
        if (v >= orders_[i]) v -= orders_[i];
        out[i] = v;
    }
    return out;
}

Residues AbelianGroup::negate(const Residues& x) const {
    check_element(x);
    Residues out(orders_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = x[i] == 0 ? 0 : orders_[i] - x[i];
    return out;
}

long long AbelianGroup::element_order(const Residues& x) const {
    check_element(x);
    long long ord = 1;
    for (size_t i = 0; i < x.size(); ++i)
        ord = std::lcm(ord, orders_[i] / std::gcd(orders_[i], x[i]));
    return ord;
}

long long AbelianGroup::code_of(const Residues& x) const {
    check_element(x);
    long long code = 0;
    for (size_t i = 0; i < x.size(); ++i) code = code * orders_[i] + x[i];
    return code;
}

Residues AbelianGroup::element_at(long long code) const {
    Residues out(orders_.size());
    for (size_t i = orders_.size(); i-- > 0;) {
        out[i] = code % orders_[i];
        code /= orders_[i];
    }
    return out;
}

std::vector<Character> characters(const AbelianGroup& g) {
    std::vector<Character> out;
    out.reserve(static_cast<size_t>(g.order()));
    for (long long c = 0; c < g.order(); ++c) out.push_back(Character{g.element_at(c)});
    return out;
}

Character conjugate(const AbelianGroup& g, const Character& chi) {
    return Character{g.negate(chi.exponents)};
}

bool is_self_conjugate(const AbelianGroup& g, const Character& chi) {
    g.check_element(chi.exponents);
    for (size_t i = 0; i < chi.exponents.size(); ++i)
        if ((2 * chi.exponents[i]) % g.cyclic_orders()[i] != 0) return false;
    return true;
}

Character mul(const AbelianGroup& g, const Character& a, const Character& b) {
    return Character{g.add(a.exponents, b.exponents)};
}

Fraction char_fraction(const AbelianGroup& g, const Character& chi, const Residues& x) {
    g.check_element(chi.exponents);
    g.check_element(x);
    // Sum a_i x_i / n_i over the common denominator |G|, reducing as we go.
    long long big = g.order();
    long long num = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        long long n = g.cyclic_orders()[i];
        long long term = (chi.exponents[i] * x[i]) % n;
        num = (num + term * (big / n)) % big;
    }
    return Fraction{num, big}; // boost reduces; the denominator then divides ord(x)
}

Residues Automorphism::apply(const AbelianGroup& g, const Residues& x) const {
    g.check_element(x);
    Residues out = g.identity();
    for (size_t i = 0; i < x.size(); ++i) {
        const Residues& img = generator_images[i];
        for (size_t j = 0; j < out.size(); ++j)
            out[j] = (out[j] + x[i] * img[j]) % g.cyclic_orders()[j];
    }
    return out;
}

long long max_group_order_for_aut() {
    if (const char* env = std::getenv("SCANNER_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 512;
}

namespace {

// Depth-first search over generator images on element codes. A tuple
// (v_1..v_k) with ord(v_i) | n_i defines an endomorphism; it is bijective
// iff the images of <e_1..e_i> stay pairwise distinct at every level.
struct AutSearch {
    const AbelianGroup& g;
    long long n;
    std::vector<int32_t> add;
    std::vector<int32_t> ord;
    std::vector<char> seen;
    std::vector<int32_t> partial; // image codes of the subgroup generated so far
    std::vector<int32_t> images;
    std::vector<Automorphism> found;

    explicit AutSearch(const AbelianGroup& grp)
        : g(grp), n(grp.order()), add(detail::build_add_table(grp)),
          ord(detail::build_order_table(grp)) {
        seen.assign(static_cast<size_t>(n), 0);
        partial.push_back(0);
        seen[0] = 1;
    }

    int32_t plus(int32_t a, int32_t b) const {
        return add[static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b)];
    }

    void run(int gen_index) {
        if (gen_index == g.rank()) {
            if (static_cast<long long>(found.size()) >= kMaxAutGroupSize)
                fail(Errc::group_too_large_for_aut_enumeration,
                     "automorphism group exceeds " + std::to_string(kMaxAutGroupSize) +
                         " elements");
            std::vector<Residues> gen_images;
            gen_images.reserve(images.size());
            for (int32_t c : images) gen_images.push_back(g.element_at(c));
            found.push_back(Automorphism{std::move(gen_images)});
            return;
        }
        long long n_i = g.cyclic_orders()[static_cast<size_t>(gen_index)];
        size_t base = partial.size();
        for (int32_t v = 0; v < n; ++v) {
            if (n_i % ord[static_cast<size_t>(v)] != 0) continue;
            bool ok = true;
            int32_t step = 0; // code of x*v
            for (long long x = 1; x < n_i && ok; ++x) {
                step = plus(step, v);
                for (size_t h = 0; h < base; ++h) {
                    int32_t img = plus(partial[h], step);
                    if (seen[static_cast<size_t>(img)]) {
                        ok = false;
                        break;
                    }
                    seen[static_cast<size_t>(img)] = 1;
                    partial.push_back(img);
                }
            }
            if (ok) {
                images.push_back(v);
                run(gen_index + 1);
                images.pop_back();
            }
            while (partial.size() > base) {
                seen[static_cast<size_t>(partial.back())] = 0;
                partial.pop_back();
            }
        }
    }
};

} // namespace

const std::vector<Automorphism>& automorphisms(const AbelianGroup& g) {
    if (g.order() > max_group_order_for_aut())
        fail(Errc::group_too_large_for_aut_enumeration,
             "|G| = " + std::to_string(g.order()) + " exceeds the bound " +
                 std::to_string(max_group_order_for_aut()));
    if (g.order() > detail::kMaxTableOrder)
        fail(Errc::group_too_large_for_aut_enumeration,
             "|G| = " + std::to_string(g.order()) + " exceeds the table limit " +
                 std::to_string(detail::kMaxTableOrder));

    static std::mutex mu;
    static std::map<Residues, std::unique_ptr<const std::vector<Automorphism>>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(g.cyclic_orders());
    if (it != memo.end()) return *it->second;

    AutSearch search(g);
    search.run(0);

    // Identity first, the rest kept in enumeration order.
    std::vector<Residues> id_images;
    for (int i = 0; i < g.rank(); ++i) {
        Residues e = g.identity();
        e[static_cast<size_t>(i)] = 1;
        id_images.push_back(std::move(e));
    }
    auto id_pos = std::find_if(search.found.begin(), search.found.end(),
                               [&](const Automorphism& a) { return a.generator_images == id_images; });
    if (id_pos != search.found.end() && id_pos != search.found.begin())
        std::rotate(search.found.begin(), id_pos, id_pos + 1);

    auto owned = std::make_unique<const std::vector<Automorphism>>(std::move(search.found));
    const auto& ref = *owned;
    memo.emplace(g.cyclic_orders(), std::move(owned));
    return ref;
}

} // namespace abelcov
