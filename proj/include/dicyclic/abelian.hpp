#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicyclic {

// Residue vector of a finite abelian group in invariant-factor form.
using Residues = std::vector<int>;

namespace detail {

inline std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Partitions of k into descending parts, deterministic order.
inline void partitions_rec(int k, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (k == 0) { out.push_back(cur); return; }
    for (int p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(k - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

} // namespace detail

// Finite abelian group, canonicalized to invariant factors d1 | d2 | ... | dk.
// Elements are residue vectors (r1,...,rk), 0 <= ri < di, indexed
// lexicographically with the first coordinate most significant.
class AbelianGroup {
public:
    explicit AbelianGroup(const std::vector<int>& factors) {
        if (factors.empty())
            throw std::invalid_argument("abelian group needs at least one cyclic factor");
        std::map<long long, std::vector<long long>> prime_powers;
        for (int f : factors) {
            if (f < 2)
                throw std::invalid_argument("cyclic factor must be >= 2, got " + std::to_string(f));
            for (auto [p, e] : detail::factorize(f)) {
                long long pe = 1;
                for (int i = 0; i < e; ++i) pe *= p;
                prime_powers[p].push_back(pe);
            }
        }
        std::size_t k = 0;
        for (auto& [p, v] : prime_powers) {
            std::sort(v.begin(), v.end(), std::greater<>());
            k = std::max(k, v.size());
        }
        std::vector<long long> inv(k, 1);
        for (auto& [p, v] : prime_powers)
            for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
        std::reverse(inv.begin(), inv.end()); // ascending, d1 | d2 | ... | dk
        long long order = 1;
        for (long long d : inv) {
            order *= d;
            if (d > std::numeric_limits<int>::max() || order > (1ll << 30))
                throw std::invalid_argument("abelian group order too large");
            factors_.push_back(int(d));
        }
        order_ = int(order);
        strides_.assign(factors_.size(), 1);
        for (int i = int(factors_.size()) - 2; i >= 0; --i)
            strides_[i] = strides_[i + 1] * factors_[i + 1];
    }

    const std::vector<int>& invariant_factors() const { return factors_; }
    int rank() const { return int(factors_.size()); }
    int order() const { return order_; }

    Residues zero() const { return Residues(factors_.size(), 0); }

    Residues add(const Residues& a, const Residues& b) const {
        Residues r(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r[i] = (a[i] + b[i]) % factors_[i];
        return r;
    }

    Residues negate(const Residues& a) const {
        Residues r(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r[i] = (factors_[i] - a[i]) % factors_[i];
        return r;
    }

    Residues reduce(Residues a) const {
        for (std::size_t i = 0; i < factors_.size(); ++i)
            a[i] = (a[i] % factors_[i] + factors_[i]) % factors_[i];
        return a;
    }

    int element_order(const Residues& a) const {
        long long ord = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            ord = std::lcm(ord, (long long)factors_[i] / std::gcd(factors_[i], a[i]));
        return int(ord);
    }

    int index_of(const Residues& a) const {
        if (int(a.size()) != rank())
            throw std::invalid_argument("residue vector has rank " + std::to_string(a.size()) +
                                        ", expected " + std::to_string(rank()));
        int idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            int r = (a[i] % factors_[i] + factors_[i]) % factors_[i];
            idx += r * strides_[i];
        }
        return idx;
    }

    Residues element_at(int index) const {
        Residues r(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            r[i] = index / strides_[i];
            index %= strides_[i];
        }
        return r;
    }

    // All v != 0 with v + v = 0, ascending element index.
    std::vector<Residues> involutions() const {
        std::vector<int> even_pos;
        for (int i = 0; i < rank(); ++i)
            if (factors_[i] % 2 == 0) even_pos.push_back(i);
        std::vector<Residues> out;
        for (unsigned m = 1; m < (1u << even_pos.size()); ++m) {
            Residues v = zero();
            for (std::size_t b = 0; b < even_pos.size(); ++b)
                if (m >> b & 1) v[even_pos[b]] = factors_[even_pos[b]] / 2;
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end(),
                  [&](const Residues& a, const Residues& b) { return index_of(a) < index_of(b); });
        return out;
    }

    std::string factor_string() const {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += 'x';
            s += std::to_string(factors_[i]);
        }
        return s;
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    std::vector<int> factors_;
    std::vector<int> strides_;
    int order_ = 1;
};

inline AbelianGroup abelian_group(const std::vector<int>& factors) { return AbelianGroup(factors); }

// One representative per isomorphism class of abelian groups of the given
// order with exactly one involution (equivalently, cyclic Sylow 2-part).
inline std::vector<AbelianGroup> abelian_groups_with_unique_involution(int order) {
    if (order % 2 != 0 || order < 4)
        throw std::invalid_argument("order must be even and at least 4, got " + std::to_string(order));
    long long m = order;
    long long two_part = 1;
    while (m % 2 == 0) { m /= 2; two_part *= 2; }
    auto odd_primes = detail::factorize(m);

    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, e] : odd_primes) per_prime.push_back(detail::partitions(e));

    std::vector<AbelianGroup> out;
    std::vector<int> choice(per_prime.size(), 0);
    for (;;) {
        std::vector<int> factors{int(two_part)};
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            long long p = odd_primes[i].first;
            for (int part : per_prime[i][choice[i]]) {
                long long pe = 1;
                for (int j = 0; j < part; ++j) pe *= p;
                factors.push_back(int(pe));
            }
        }
        out.emplace_back(factors);
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < int(per_prime[i].size())) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
        return a.invariant_factors() < b.invariant_factors();
    });
    return out;
}

} // namespace dicyclic
