#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley.hpp"
#include "graph.hpp"

namespace dicyclic {

inline constexpr int kDefaultVertexCap = 4096;

namespace detail {

inline void check_cap(long long order, int cap, const char* what) {
    if (order > cap)
        throw std::invalid_argument(std::string(what) + " has " + std::to_string(order) +
                                    " vertices, exceeding the cap of " + std::to_string(cap));
}

} // namespace detail

inline Graph complete_graph(int n, int cap = kDefaultVertexCap) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    detail::check_cap(n, cap, "complete graph");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Balanced complete bipartite graph K_{m,m}; parts [0,m) and [m,2m).
inline Graph complete_bipartite(int m, int cap = kDefaultVertexCap) {
    if (m < 1) throw std::invalid_argument("complete bipartite graph needs m >= 1");
    detail::check_cap(2ll * m, cap, "complete bipartite graph");
    Graph g(2 * m);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n, int cap = kDefaultVertexCap) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    detail::check_cap(n, cap, "cycle");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// (u1,v1) ~ (u2,v2) iff u1 = u2 and v1 ~ v2, or v1 = v2 and u1 ~ u2.
// Vertex (i1, i2) gets index i1*|V2| + i2 (row-major).
inline Graph cartesian_product(const Graph& g1, const Graph& g2, int cap = kDefaultVertexCap) {
    if (g1.order() == 0 || g2.order() == 0)
        throw std::invalid_argument("cartesian product factors must be nonempty");
    const long long n = (long long)g1.order() * g2.order();
    detail::check_cap(n, cap, "cartesian product");
    const int m = g2.order();
    Graph g{int(n)};
    for (int u = 0; u < g1.order(); ++u) {
        for (int v = 0; v < m; ++v) {
            for (int w : g2.neighbors(v))
                if (w > v) g.add_edge(u * m + v, u * m + w);
            for (int w : g1.neighbors(u))
                if (w > u) g.add_edge(u * m + v, w * m + v);
        }
    }
    return g;
}

// Cartesian product of d copies of K_q.
inline Graph hamming_graph(int d, int q, int cap = kDefaultVertexCap) {
    if (d < 1 || q < 2) throw std::invalid_argument("hamming graph needs d >= 1, q >= 2");
    long long order = 1;
    for (int i = 0; i < d; ++i) {
        order *= q;
        detail::check_cap(order, cap, "hamming graph");
    }
    Graph g = complete_graph(q, cap);
    for (int i = 1; i < d; ++i) g = cartesian_product(g, complete_graph(q, cap), cap);
    return g;
}

// Cay(Z4 x Z4, {+-(1,0), +-(0,1), +-(1,1)}).
inline Graph shrikhande_graph() {
    AbelianGroup z44({4, 4});
    GroupTable table = GroupTable::abelian(z44);
    std::vector<int> elems;
    for (Residues v : {Residues{1, 0}, Residues{3, 0}, Residues{0, 1},
                       Residues{0, 3}, Residues{1, 1}, Residues{3, 3}})
        elems.push_back(table.index_of({0, v}));
    return cayley_graph(table, ConnectionSet(table, elems));
}

// Cartesian product of H(n,4) with m copies of the Shrikhande graph;
// for n = 0 just the product of m copies.
inline Graph doob_graph(int n, int m, int cap = kDefaultVertexCap) {
    if (n < 0 || m < 1) throw std::invalid_argument("doob graph needs n >= 0, m >= 1");
    long long order = 1;
    for (int i = 0; i < n; ++i) order *= 4;
    for (int i = 0; i < m; ++i) order *= 16;
    detail::check_cap(order, cap, "doob graph");
    Graph g = n > 0 ? hamming_graph(n, 4, cap) : shrikhande_graph();
    for (int i = n > 0 ? 0 : 1; i < m; ++i) g = cartesian_product(g, shrikhande_graph(), cap);
    if (n == 0 && m == 1) g.clear_provenance();
    return g;
}

// CLI names: "complete:n", "kmm:m", "cycle:n", "hamming:d,q", "shrikhande", "doob:n,m".
inline Graph named_graph(std::string_view spec, int cap = kDefaultVertexCap) {
    const auto colon = spec.find(':');
    const std::string name(spec.substr(0, colon));
    std::vector<int> params;
    if (colon != std::string_view::npos) {
        std::size_t pos = colon + 1;
        for (;;) {
            if (pos >= spec.size() || !std::isdigit((unsigned char)spec[pos]))
                throw std::invalid_argument("bad parameter list in graph name \"" +
                                            std::string(spec) + "\"");
            long long v = 0;
            while (pos < spec.size() && std::isdigit((unsigned char)spec[pos])) {
                v = v * 10 + (spec[pos] - '0');
                if (v > kDefaultVertexCap * 16ll) break;
                ++pos;
            }
            params.push_back(int(v));
            if (pos == spec.size()) break;
            if (spec[pos] != ',')
                throw std::invalid_argument("bad parameter list in graph name \"" +
                                            std::string(spec) + "\"");
            ++pos;
        }
    }
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("graph \"" + name + "\" takes " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "complete") { want(1); return complete_graph(params[0], cap); }
    if (name == "kmm") { want(1); return complete_bipartite(params[0], cap); }
    if (name == "cycle") { want(1); return cycle_graph(params[0], cap); }
    if (name == "hamming") { want(2); return hamming_graph(params[0], params[1], cap); }
    if (name == "shrikhande") { want(0); return shrikhande_graph(); }
    if (name == "doob") { want(2); return doob_graph(params[0], params[1], cap); }
    throw std::invalid_argument("unknown graph name \"" + name + "\"");
}

} // namespace dicyclic
