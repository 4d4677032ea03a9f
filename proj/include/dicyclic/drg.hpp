#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace dicyclic {

struct DistancePartition {
    static constexpr int kUnreachable = -1;
    int source = 0;
    std::vector<int> dist;                 // kUnreachable marks unreachable vertices
    std::vector<std::vector<int>> levels;  // N_0 .. N_ecc, ascending vertex order
    int eccentricity() const { return int(levels.size()) - 1; }
};

namespace detail {

struct BfsData {
    std::vector<int> dist;
    std::vector<std::vector<int>> levels;
    std::vector<IndexSet> level_masks;
    bool complete = false; // all vertices reached
};

inline BfsData bfs(const Graph& g, int source, bool want_masks) {
    const int n = g.order();
    BfsData out;
    out.dist.assign(n, DistancePartition::kUnreachable);
    out.dist[source] = 0;
    std::vector<int> frontier{source};
    int level = 0;
    while (!frontier.empty()) {
        out.levels.push_back(frontier);
        if (want_masks) {
            IndexSet m(n);
            for (int v : frontier) m.set(v);
            out.level_masks.push_back(std::move(m));
        }
        std::vector<int> next;
        for (int v : frontier)
            for (int u : g.neighbors(v))
                if (out.dist[u] == DistancePartition::kUnreachable) {
                    out.dist[u] = level + 1;
                    next.push_back(u);
                }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
        ++level;
    }
    out.complete = true;
    for (int v = 0; v < n; ++v)
        if (out.dist[v] == DistancePartition::kUnreachable) { out.complete = false; break; }
    return out;
}

} // namespace detail

inline DistancePartition distance_partition(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("source vertex " + std::to_string(source) + " out of range");
    auto b = detail::bfs(g, source, false);
    return {source, std::move(b.dist), std::move(b.levels)};
}

struct IntersectionArray {
    int d = 0;
    std::vector<int> b; // b_0 .. b_{d-1}
    std::vector<int> c; // c_1 .. c_d
    std::vector<int> a; // a_0 .. a_d
    int valency() const { return b.empty() ? 0 : b[0]; }

    // "{b0,...,b_{d-1}; c1,...,c_d}", e.g. "{4,3; 1,4}"
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i]);
        }
        s += "; ";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        s += '}';
        return s;
    }
    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

struct PairTriple {
    int u = 0, v = 0;       // ordered pair at the given distance
    int c = 0, a = 0, b = 0;
    friend bool operator==(const PairTriple&, const PairTriple&) = default;
};

struct RegularityWitness {
    int distance = 0;
    PairTriple first, second; // differing (c,a,b) triples at the same distance
    friend bool operator==(const RegularityWitness&, const RegularityWitness&) = default;
};

struct RegularityVerdict {
    bool is_drg = false;
    std::optional<IntersectionArray> array;
    std::optional<RegularityWitness> witness;
    std::string note;
};

// Exact distance-regularity check over all ordered pairs, scanning u then v
// ascending; the first discrepancy is reported as a re-checkable witness.
inline RegularityVerdict intersection_array(const Graph& g) {
    const int n = g.order();
    RegularityVerdict verdict;
    if (n == 0) { verdict.note = "empty graph"; return verdict; }
    auto valency = g.regular_valency();
    if (!valency) {
        int k0 = g.degree(0);
        for (int v = 1; v < n; ++v)
            if (g.degree(v) != k0) {
                verdict.note = "not regular: deg(0) = " + std::to_string(k0) + ", deg(" +
                               std::to_string(v) + ") = " + std::to_string(g.degree(v));
                break;
            }
        return verdict;
    }

    struct Ref { PairTriple t; bool set = false; };
    std::vector<Ref> ref;
    for (int u = 0; u < n; ++u) {
        auto bfs = detail::bfs(g, u, true);
        if (!bfs.complete) { verdict.note = "disconnected"; return verdict; }
        const int ecc = int(bfs.levels.size()) - 1;
        for (int v = 0; v < n; ++v) {
            const int i = bfs.dist[v];
            PairTriple t;
            t.u = u;
            t.v = v;
            t.c = i > 0 ? IndexSet::and_count(bfs.level_masks[i - 1], g.row(v)) : 0;
            t.a = IndexSet::and_count(bfs.level_masks[i], g.row(v));
            t.b = i + 1 <= ecc ? IndexSet::and_count(bfs.level_masks[i + 1], g.row(v)) : 0;
            if (i >= int(ref.size())) ref.resize(i + 1);
            if (!ref[i].set) {
                ref[i].t = t;
                ref[i].set = true;
            } else if (ref[i].t.c != t.c || ref[i].t.a != t.a || ref[i].t.b != t.b) {
                verdict.witness = RegularityWitness{i, ref[i].t, t};
                verdict.note = "intersection numbers vary at distance " + std::to_string(i);
                return verdict;
            }
        }
    }

    IntersectionArray arr;
    arr.d = int(ref.size()) - 1;
    for (int i = 0; i < arr.d; ++i) arr.b.push_back(ref[i].t.b);
    for (int i = 1; i <= arr.d; ++i) arr.c.push_back(ref[i].t.c);
    for (int i = 0; i <= arr.d; ++i) arr.a.push_back(ref[i].t.a);
    verdict.is_drg = true;
    verdict.array = std::move(arr);
    return verdict;
}

struct RegularPairCounts {
    int distance = 0; // 1 for lambda, 2 for mu
    int u1 = 0, v1 = 0, count1 = 0;
    int u2 = 0, v2 = 0, count2 = 0;
};

struct AmplyRegularParams {
    bool ok = false;
    int n = 0, k = 0, lambda = 0, mu = 0;
    bool no_distance2_pairs = false; // diameter < 2: mu vacuously constant, reported 0
    std::optional<RegularPairCounts> witness;
    std::string note;
};

inline AmplyRegularParams amply_regular_params(const Graph& g) {
    const int n = g.order();
    AmplyRegularParams out;
    if (n == 0) { out.note = "empty graph"; return out; }
    auto valency = g.regular_valency();
    if (!valency) { out.note = "not regular"; return out; }

    bool have_lambda = false, have_mu = false;
    int lu = 0, lv = 0, mu_u = 0, mu_v = 0;
    for (int u = 0; u < n; ++u) {
        auto bfs = detail::bfs(g, u, false);
        if (!bfs.complete) { out.note = "disconnected"; return out; }
        for (int v = 0; v < n; ++v) {
            if (bfs.dist[v] != 1 && bfs.dist[v] != 2) continue;
            const int common = IndexSet::and_count(g.row(u), g.row(v));
            if (bfs.dist[v] == 1) {
                if (!have_lambda) { out.lambda = common; lu = u; lv = v; have_lambda = true; }
                else if (common != out.lambda) {
                    out.witness = RegularPairCounts{1, lu, lv, out.lambda, u, v, common};
                    out.note = "lambda varies over adjacent pairs";
                    return out;
                }
            } else {
                if (!have_mu) { out.mu = common; mu_u = u; mu_v = v; have_mu = true; }
                else if (common != out.mu) {
                    out.witness = RegularPairCounts{2, mu_u, mu_v, out.mu, u, v, common};
                    out.note = "mu varies over distance-2 pairs";
                    return out;
                }
            }
        }
    }
    out.ok = true;
    out.n = n;
    out.k = *valency;
    out.no_distance2_pairs = !have_mu;
    if (!have_mu) out.mu = 0;
    return out;
}

struct StronglyRegularParams {
    bool ok = false;
    int n = 0, k = 0, lambda = 0, mu = 0;
    std::string note;
};

// Succeeds exactly when the graph is distance-regular with diameter 2.
inline StronglyRegularParams strongly_regular_params(const Graph& g) {
    StronglyRegularParams out;
    auto verdict = intersection_array(g);
    if (!verdict.is_drg) {
        out.note = "not distance-regular: " + verdict.note;
        return out;
    }
    const auto& arr = *verdict.array;
    if (arr.d != 2) {
        out.note = "diameter " + std::to_string(arr.d) + " != 2";
        return out;
    }
    out.ok = true;
    out.n = g.order();
    out.k = arr.b[0];
    out.lambda = arr.a[1];
    out.mu = arr.c[1];
    return out;
}

// Graph on V(g) joining pairs at distance exactly i.
inline Graph distance_i_graph(const Graph& g, int i) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("empty graph");
    auto first = detail::bfs(g, 0, false);
    if (!first.complete) throw std::invalid_argument("distance_i_graph requires a connected graph");
    int diam = 0;
    Graph out(n);
    std::vector<detail::BfsData> all;
    all.reserve(n);
    all.push_back(std::move(first));
    for (int u = 1; u < n; ++u) all.push_back(detail::bfs(g, u, false));
    for (const auto& b : all) diam = std::max(diam, int(b.levels.size()) - 1);
    if (i < 1 || i > diam)
        throw std::invalid_argument("distance index " + std::to_string(i) + " out of range [1," +
                                    std::to_string(diam) + "]");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (all[u].dist[v] == i) out.add_edge(u, v);
    return out;
}

struct PrimitivityProfile {
    bool primitive = false;
    bool bipartite = false;
    bool antipodal = false;
    friend bool operator==(const PrimitivityProfile&, const PrimitivityProfile&) = default;
};

namespace detail {

inline bool two_colorable(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) { color[u] = color[v] ^ 1; stack.push_back(u); }
                else if (color[u] == color[v]) return false;
            }
        }
    }
    return true;
}

} // namespace detail

// Requires a connected distance-regular graph. Antipodal means the relation
// "at distance 0 or d" is an equivalence; by convention false for d = 1.
inline PrimitivityProfile primitivity_profile(const Graph& g) {
    auto verdict = intersection_array(g);
    if (!verdict.is_drg)
        throw std::invalid_argument("primitivity_profile requires a distance-regular graph (" +
                                    verdict.note + ")");
    const int d = verdict.array->d;
    const int n = g.order();
    PrimitivityProfile out;
    out.bipartite = detail::two_colorable(g);

    out.primitive = true;
    for (int i = 1; i <= d && out.primitive; ++i) {
        Graph gi = distance_i_graph(g, i);
        out.primitive = detail::bfs(gi, 0, false).complete;
    }

    if (d <= 1) {
        out.antipodal = false;
        return out;
    }
    std::vector<IndexSet> cls(n, IndexSet(n));
    std::vector<detail::BfsData> all;
    all.reserve(n);
    for (int u = 0; u < n; ++u) {
        all.push_back(detail::bfs(g, u, false));
        cls[u].set(u);
        for (int v = 0; v < n; ++v)
            if (all[u].dist[v] == d) cls[u].set(v);
    }
    out.antipodal = true;
    for (int u = 0; u < n && out.antipodal; ++u)
        for (int v = 0; v < n; ++v)
            if (cls[u].test(v) && !(cls[v] == cls[u])) { out.antipodal = false; break; }
    return out;
}

} // namespace dicyclic
