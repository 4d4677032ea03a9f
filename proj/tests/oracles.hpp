// Independent brute-force oracles used to cross-check the library. These
// deliberately avoid the library's BFS/bit-row machinery: distances come from
// Floyd-Warshall on an adjacency matrix, counts from plain loops.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "dicyclic/drg.hpp"
#include "dicyclic/graph.hpp"
#include "dicyclic/group.hpp"

namespace oracles {

constexpr int kInf = 1 << 28;

inline std::vector<std::vector<bool>> adjacency_matrix(const dicyclic::Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) m[u][v] = true;
    return m;
}

inline std::vector<std::vector<int>> floyd_warshall(const dicyclic::Graph& g) {
    const int n = g.order();
    auto adj = adjacency_matrix(g);
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (adj[u][v]) d[u][v] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

struct BruteArray {
    bool is_drg = false;
    int d = 0;
    std::vector<int> b, c, a;
    std::string why;
};

// Distance-regularity decided from first principles: constancy of
// |N_{i-1}(u) n N(v)|, |N_i(u) n N(v)|, |N_{i+1}(u) n N(v)| over all ordered
// pairs at each distance.
inline BruteArray brute_intersection_array(const dicyclic::Graph& g) {
    BruteArray out;
    const int n = g.order();
    if (n == 0) { out.why = "empty"; return out; }
    const auto adj = adjacency_matrix(g);
    int k = g.degree(0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != k) { out.why = "not regular"; return out; }
    const auto dist = floyd_warshall(g);
    int diam = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (dist[u][v] >= kInf) { out.why = "disconnected"; return out; }
            diam = std::max(diam, dist[u][v]);
        }
    std::vector<std::array<int, 3>> ref(diam + 1, {-1, -1, -1});
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int i = dist[u][v];
            int ci = 0, ai = 0, bi = 0;
            for (int w = 0; w < n; ++w) {
                if (!adj[v][w]) continue;
                if (dist[u][w] == i - 1) ++ci;
                else if (dist[u][w] == i) ++ai;
                else if (dist[u][w] == i + 1) ++bi;
            }
            if (ref[i][0] < 0) ref[i] = {ci, ai, bi};
            else if (ref[i] != std::array<int, 3>{ci, ai, bi}) {
                out.why = "triples vary";
                return out;
            }
        }
    out.is_drg = true;
    out.d = diam;
    for (int i = 0; i < diam; ++i) out.b.push_back(ref[i][2]);
    for (int i = 1; i <= diam; ++i) out.c.push_back(ref[i][0]);
    for (int i = 0; i <= diam; ++i) out.a.push_back(ref[i][1]);
    return out;
}

inline int common_neighbors(const dicyclic::Graph& g, int u, int v) {
    int c = 0;
    for (int w = 0; w < g.order(); ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) ++c;
    return c;
}

// (n, k, lambda, mu) or nullopt, from plain pair scans.
inline std::optional<std::array<int, 4>> brute_amply_regular(const dicyclic::Graph& g) {
    const int n = g.order();
    if (n == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    const auto dist = floyd_warshall(g);
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (dist[u][v] >= kInf) return std::nullopt;
            if (dist[u][v] == 1) {
                const int c = common_neighbors(g, u, v);
                if (lambda < 0) lambda = c;
                else if (lambda != c) return std::nullopt;
            } else if (dist[u][v] == 2) {
                const int c = common_neighbors(g, u, v);
                if (mu < 0) mu = c;
                else if (mu != c) return std::nullopt;
            }
        }
    if (lambda < 0) lambda = 0;
    if (mu < 0) mu = 0;
    return std::array<int, 4>{n, k, lambda, mu};
}

// Subgroup closure by repeated pairwise products until a fixpoint.
inline std::vector<int> closure_by_products(const dicyclic::GroupTable& g,
                                            const std::vector<int>& seed) {
    std::vector<char> in(g.order(), 0);
    in[dicyclic::GroupTable::kIdentity] = 1;
    for (int s : seed) { in[s] = 1; in[g.inv(s)] = 1; }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < g.order(); ++a) {
            if (!in[a]) continue;
            for (int b = 0; b < g.order(); ++b) {
                if (!in[b]) continue;
                const int p = g.mul(a, b);
                if (!in[p]) { in[p] = 1; changed = true; }
            }
        }
    }
    std::vector<int> out;
    for (int e = 0; e < g.order(); ++e)
        if (in[e]) out.push_back(e);
    return out;
}

inline long long count_4_cliques(const dicyclic::Graph& g) {
    const int n = g.order();
    long long count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d)) ++count;
            }
        }
    return count;
}

// Exhaustive isomorphism over all vertex permutations; tiny graphs only.
inline bool tiny_isomorphic(const dicyclic::Graph& g1, const dicyclic::Graph& g2) {
    if (g1.order() != g2.order()) return false;
    const int n = g1.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g1.adjacent(u, v) != g2.adjacent(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All invariant-factor sequences of abelian groups of the given order,
// built from per-prime exponent partitions.
inline std::vector<std::vector<int>> all_abelian_factor_lists(int order) {
    auto primes = dicyclic::detail::factorize(order);
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, e] : primes) per_prime.push_back(dicyclic::detail::partitions(e));
    std::vector<std::vector<int>> out;
    std::vector<int> choice(per_prime.size(), 0);
    for (;;) {
        std::vector<int> factors;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            for (int part : per_prime[i][choice[i]]) {
                long long pe = 1;
                for (int j = 0; j < part; ++j) pe *= primes[i].first;
                factors.push_back(int(pe));
            }
        out.push_back(factors);
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < int(per_prime[i].size())) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return out;
}

} // namespace oracles
