#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "abelian.hpp"
#include "bitset.hpp"

namespace dicyclic {

enum class GroupKind { abelian, generalized_dicyclic };

// t^eps * x with x a residue vector of the base abelian group A.
struct GroupElement {
    int eps = 0;
    Residues vec;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct parse_error : std::runtime_error {
    int position;
    std::string expected;
    parse_error(int pos, std::string exp)
        : std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": expected " + exp),
          position(pos),
          expected(std::move(exp)) {}
};

// Explicit finite group over dense element indices. Index 0 is the identity.
// For the generalized dicyclic kind the base elements come first in
// lexicographic residue order, then t*A in the same order.
class GroupTable {
public:
    static constexpr int kIdentity = 0;
    static constexpr int kDefaultOrderCap = 96;

    static GroupTable abelian(const AbelianGroup& base, int order_cap = kDefaultOrderCap) {
        const int n = base.order();
        if (n > order_cap)
            throw std::invalid_argument("group order " + std::to_string(n) + " exceeds cap " +
                                        std::to_string(order_cap));
        GroupTable t(GroupKind::abelian, base, n);
        for (int g = 0; g < n; ++g) {
            Residues x = base.element_at(g);
            for (int h = 0; h < n; ++h)
                t.mul_[std::size_t(g) * n + h] = base.index_of(base.add(x, base.element_at(h)));
        }
        t.finish();
        return t;
    }

    // Group <A, t> with t^2 = a (the unique involution of A) and
    // t^-1 x t = x^-1 for all x in A. Requires |A| = 2n with n > 1.
    static GroupTable generalized_dicyclic(const AbelianGroup& base,
                                           int order_cap = kDefaultOrderCap) {
        const int an = base.order();
        if (an % 2 != 0)
            throw std::invalid_argument("generalized dicyclic base must have even order, got " +
                                        std::to_string(an));
        if (an == 2)
            throw std::invalid_argument(
                "generalized dicyclic base of order 2 gives n = 1; n > 1 is required");
        auto invs = base.involutions();
        if (invs.size() != 1)
            throw std::invalid_argument("generalized dicyclic base must have exactly one involution, found " +
                                        std::to_string(invs.size()));
        const int order = 2 * an;
        if (order > order_cap)
            throw std::invalid_argument("group order " + std::to_string(order) + " exceeds cap " +
                                        std::to_string(order_cap));
        GroupTable t(GroupKind::generalized_dicyclic, base, order);
        const Residues a = invs[0];
        for (int g = 0; g < order; ++g) {
            const int eps1 = g / an;
            const Residues x1 = base.element_at(g % an);
            for (int h = 0; h < order; ++h) {
                const int eps2 = h / an;
                const Residues x2 = base.element_at(h % an);
                int idx;
                if (eps2 == 0) {
                    // (t^e x)(y) = t^e (xy)
                    idx = eps1 * an + base.index_of(base.add(x1, x2));
                } else {
                    // (x)(ty) = t(x^-1 y);  (tx)(ty) = a x^-1 y
                    Residues v = base.add(x2, base.negate(x1));
                    if (eps1) v = base.add(v, a);
                    idx = (eps1 ^ eps2) * an + base.index_of(v);
                }
                t.mul_[std::size_t(g) * order + h] = idx;
            }
        }
        t.finish();
        return t;
    }

    int order() const { return order_; }
    GroupKind kind() const { return kind_; }
    const AbelianGroup& base() const { return base_; }

    int mul(int g, int h) const { return mul_[std::size_t(g) * order_ + h]; }
    int inv(int g) const { return inv_[g]; }

    int power(int g, long long k) const {
        if (k < 0) return power(inv_[g], -k);
        int acc = kIdentity;
        for (long long i = 0; i < k; ++i) acc = mul(acc, g);
        return acc;
    }

    int element_order(int g) const {
        int acc = g, k = 1;
        while (acc != kIdentity) { acc = mul(acc, g); ++k; }
        return k;
    }

    bool in_abelian_part(int g) const {
        return kind_ == GroupKind::abelian || g < base_.order();
    }

    // Index of the unique element of order 2, or -1 if there is none or several.
    int involution() const { return involution_; }

    GroupElement label(int g) const {
        const int an = base_.order();
        if (kind_ == GroupKind::abelian) return {0, base_.element_at(g)};
        return {g / an, base_.element_at(g % an)};
    }

    int index_of(const GroupElement& e) const {
        if (e.eps != 0 && e.eps != 1)
            throw std::invalid_argument("element t-exponent must be 0 or 1");
        if (e.eps == 1 && kind_ == GroupKind::abelian)
            throw std::invalid_argument("t-part element in an abelian group");
        return e.eps * base_.order() + base_.index_of(base_.reduce(e.vec));
    }

    std::string spec_string() const {
        return (kind_ == GroupKind::generalized_dicyclic ? "dicyclic:" : "abelian:") +
               base_.factor_string();
    }

private:
    GroupTable(GroupKind kind, AbelianGroup base, int order)
        : kind_(kind), base_(std::move(base)), order_(order),
          mul_(std::size_t(order) * order, 0), inv_(order, 0) {}

    void finish() {
        for (int g = 0; g < order_; ++g) {
            int found = -1;
            for (int h = 0; h < order_; ++h)
                if (mul(g, h) == kIdentity && mul(h, g) == kIdentity) { found = h; break; }
            if (found < 0) throw std::logic_error("element without a two-sided inverse");
            inv_[g] = found;
        }
        int inv_count = 0, inv_idx = -1;
        for (int g = 1; g < order_; ++g)
            if (mul(g, g) == kIdentity) { ++inv_count; inv_idx = g; }
        involution_ = (inv_count == 1) ? inv_idx : -1;
    }

    GroupKind kind_;
    AbelianGroup base_;
    int order_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    int involution_ = -1;
};

struct Subgroup {
    std::vector<int> members; // sorted, contains the identity
    IndexSet mask;
    int index_in_g = 0;

    bool contains(int g) const { return mask.test(g); }
    int size() const { return int(members.size()); }
};

// Smallest subgroup containing the seed: right-multiplication closure of the
// identity over the table (a finite sub-semigroup with 1 is a subgroup).
inline Subgroup generated_subgroup(const GroupTable& g, const std::vector<int>& seed) {
    const int n = g.order();
    Subgroup s;
    s.mask = IndexSet(n);
    s.mask.set(GroupTable::kIdentity);
    std::vector<int> queue{GroupTable::kIdentity};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (int gen : seed) {
            int p = g.mul(queue[qi], gen);
            if (!s.mask.test(p)) { s.mask.set(p); queue.push_back(p); }
        }
    }
    s.members = s.mask.to_vector();
    s.index_in_g = n / int(s.members.size());
    return s;
}

// Left cosets gH, the identity's block first; each next block starts at the
// smallest element index not yet covered.
inline std::vector<std::vector<int>> left_cosets(const GroupTable& g, const Subgroup& h) {
    const int n = g.order();
    IndexSet used(n);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) {
        if (used.test(v)) continue;
        std::vector<int> block;
        block.reserve(h.members.size());
        for (int m : h.members) {
            int p = g.mul(v, m);
            used.set(p);
            block.push_back(p);
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

// Element text form: ["t*"] "(" int {"," int} ")".
inline std::string format_element(const AbelianGroup& base, const GroupElement& e) {
    std::string s = e.eps ? "t*(" : "(";
    const Residues v = base.reduce(e.vec);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    s += ')';
    return s;
}

inline GroupElement parse_element(const AbelianGroup& base, std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& expected) { return parse_error(int(pos), expected); };
    GroupElement e;
    if (pos < text.size() && text[pos] == 't') {
        ++pos;
        if (pos >= text.size() || text[pos] != '*') throw fail("'*'");
        ++pos;
        e.eps = 1;
    }
    if (pos >= text.size() || text[pos] != '(') throw fail(e.eps ? "'('" : "'(' or \"t*\"");
    ++pos;
    const int rank = base.rank();
    for (int i = 0; i < rank; ++i) {
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') { neg = true; ++pos; }
        if (pos >= text.size() || !std::isdigit((unsigned char)text[pos])) throw fail("integer");
        const long long d = base.invariant_factors()[i];
        long long v = 0;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            v = (v * 10 + (text[pos] - '0')) % d;
            ++pos;
        }
        e.vec.push_back(int(((neg ? -v : v) % d + d) % d));
        if (i + 1 < rank) {
            if (pos >= text.size() || text[pos] != ',') throw fail("','");
            ++pos;
        }
    }
    if (pos < text.size() && text[pos] == ',') throw fail("')'");
    if (pos >= text.size() || text[pos] != ')') throw fail(rank > 0 ? "')'" : "')'");
    ++pos;
    if (pos != text.size()) throw fail("end of input");
    return e;
}

// Group spec string: "dicyclic:4", "dicyclic:3x6", "abelian:4x4".
inline GroupTable parse_group_spec(std::string_view spec,
                                   int order_cap = GroupTable::kDefaultOrderCap) {
    const auto colon = spec.find(':');
    const std::string_view kind = spec.substr(0, colon);
    if (kind != "dicyclic" && kind != "abelian")
        throw parse_error(0, "\"dicyclic:\" or \"abelian:\"");
    if (colon == std::string_view::npos || colon + 1 >= spec.size())
        throw parse_error(int(spec.size()), "factor list");
    std::vector<int> factors;
    std::size_t pos = colon + 1;
    for (;;) {
        if (pos >= spec.size() || !std::isdigit((unsigned char)spec[pos]))
            throw parse_error(int(pos), "integer");
        long long v = 0;
        while (pos < spec.size() && std::isdigit((unsigned char)spec[pos])) {
            v = v * 10 + (spec[pos] - '0');
            if (v > (1 << 20)) throw parse_error(int(pos), "smaller factor");
            ++pos;
        }
        factors.push_back(int(v));
        if (pos == spec.size()) break;
        if (spec[pos] != 'x') throw parse_error(int(pos), "'x' or end of input");
        ++pos;
    }
    AbelianGroup base(factors);
    return kind == "dicyclic" ? GroupTable::generalized_dicyclic(base, order_cap)
                              : GroupTable::abelian(base, order_cap);
}

} // namespace dicyclic
