#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "drg.hpp"
#include "graph.hpp"

namespace dicyclic {

inline constexpr int kDefaultIsoCap = 256;

// Exact canonical certificate. Equal certificates <=> isomorphic graphs.
// certificate = 4-byte big-endian order, then the upper-triangular adjacency
// bits of the relabeled graph in row-major order, packed most-significant
// bit first. labeling[v] is the canonical position of vertex v.
struct CanonicalForm {
    std::vector<std::uint8_t> certificate;
    std::vector<int> labeling;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(certificate.size() * 2);
        for (std::uint8_t b : certificate) {
            s += digits[b >> 4];
            s += digits[b & 15];
        }
        return s;
    }
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace canondetail {

using Coloring = std::vector<int>;

// Iterated neighbor-color refinement. Classes are renumbered each round by
// sorted (color, sorted neighbor-color multiset) signature, so the numbering
// depends only on the isomorphism type, never on vertex labels.
inline void refine(const Graph& g, Coloring& color) {
    const int n = g.order();
    if (n == 0) return;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n), next(n);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.clear();
            s.push_back(color[v]);
            for (int u : g.neighbors(v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (next == color) break;
        color = next;
    }
}

inline bool discrete(const Coloring& color) {
    if (color.empty()) return true;
    return *std::max_element(color.begin(), color.end()) == int(color.size()) - 1;
}

// Split v off its class: v keeps its color, classmates shift up by one.
inline Coloring individualized(const Coloring& color, int v) {
    Coloring c(color.size());
    const int cv = color[v];
    for (std::size_t w = 0; w < color.size(); ++w) {
        c[w] = color[w];
        if (color[w] > cv || (color[w] == cv && int(w) != v)) ++c[w];
    }
    return c;
}

inline std::vector<std::uint8_t> certificate_bytes(const Graph& g, const Coloring& pos) {
    const int n = g.order();
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[pos[v]] = v;
    std::vector<std::uint8_t> cert(4 + (std::size_t(n) * (n - 1) / 2 + 7) / 8, 0);
    cert[0] = std::uint8_t(n >> 24);
    cert[1] = std::uint8_t(n >> 16);
    cert[2] = std::uint8_t(n >> 8);
    cert[3] = std::uint8_t(n);
    std::size_t bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.adjacent(vertex_at[i], vertex_at[j]))
                cert[4 + bit / 8] |= std::uint8_t(1u << (7 - bit % 8));
    return cert;
}

// Individualization-refinement search for the lexicographically smallest
// certificate. Certificate ties between leaves yield automorphisms; orbits of
// the prefix-stabilizing subgroup they generate prune sibling branches.
struct CanonSearch {
    const Graph& g;
    std::vector<std::vector<int>> autos;
    std::vector<std::uint8_t> best;
    Coloring best_pos;
    bool have_best = false;
    std::vector<int> prefix;
    static constexpr std::size_t kMaxAutos = 512;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    void run() {
        Coloring c(g.order(), 0);
        refine(g, c);
        dfs(c);
    }

    void dfs(const Coloring& color) {
        if (discrete(color)) {
            leaf(color);
            return;
        }
        const int n = g.order();
        std::vector<int> class_size(n, 0);
        for (int v = 0; v < n; ++v) ++class_size[color[v]];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (class_size[c] >= 2 && (target == -1 || class_size[c] < class_size[target]))
                target = c;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) cell.push_back(v);
        std::vector<int> processed;
        for (int v : cell) {
            if (orbit_pruned(v, processed)) continue;
            processed.push_back(v);
            Coloring child = individualized(color, v);
            refine(g, child);
            prefix.push_back(v);
            dfs(child);
            prefix.pop_back();
        }
    }

    void leaf(const Coloring& pos) {
        auto cert = certificate_bytes(g, pos);
        if (!have_best || cert < best) {
            best = std::move(cert);
            best_pos = pos;
            have_best = true;
            return;
        }
        if (cert == best && autos.size() < kMaxAutos) {
            const int n = g.order();
            std::vector<int> vertex_at(n);
            for (int v = 0; v < n; ++v) vertex_at[best_pos[v]] = v;
            std::vector<int> sigma(n);
            for (int v = 0; v < n; ++v) sigma[v] = vertex_at[pos[v]];
            autos.push_back(std::move(sigma));
        }
    }

    bool orbit_pruned(int v, const std::vector<int>& processed) {
        if (processed.empty() || autos.empty()) return false;
        const int n = g.order();
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool any = false;
        for (const auto& s : autos) {
            bool fixes = true;
            for (int p : prefix)
                if (s[p] != p) { fixes = false; break; }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n; ++x) {
                int a = find(x), b = find(s[x]);
                if (a != b) uf[a] = b;
            }
        }
        if (!any) return false;
        const int rv = find(v);
        for (int p : processed)
            if (find(p) == rv) return true;
        return false;
    }
};

} // namespace canondetail

inline CanonicalForm canonical_form(const Graph& g, int iso_cap = kDefaultIsoCap) {
    if (g.order() > iso_cap)
        throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                    " exceeds isomorphism cap " + std::to_string(iso_cap));
    if (g.order() == 0) return {{0, 0, 0, 0}, {}};
    canondetail::CanonSearch search(g);
    search.run();
    return {std::move(search.best), std::move(search.best_pos)};
}

// Certificate equality, after cheap exact rejections (order, degree sequence,
// distance-level-size multisets).
inline bool is_isomorphic(const Graph& g1, const Graph& g2, int iso_cap = kDefaultIsoCap) {
    if (g1.order() != g2.order()) return false;
    auto degseq = [](const Graph& g) {
        std::vector<int> d(g.order());
        for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(g1) != degseq(g2)) return false;
    auto level_profile = [](const Graph& g) {
        std::vector<std::vector<int>> prof(g.order());
        for (int v = 0; v < g.order(); ++v) {
            auto b = detail::bfs(g, v, false);
            for (const auto& lvl : b.levels) prof[v].push_back(int(lvl.size()));
        }
        std::sort(prof.begin(), prof.end());
        return prof;
    };
    if (level_profile(g1) != level_profile(g2)) return false;
    return canonical_form(g1, iso_cap).certificate == canonical_form(g2, iso_cap).certificate;
}

} // namespace dicyclic
