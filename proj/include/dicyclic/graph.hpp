#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"

namespace dicyclic {

// Where a graph came from; drives vertex labels in exports.
struct Provenance {
    std::string group;                        // group spec string, empty if none
    std::vector<std::string> connection_set;  // element text forms, ascending index
    std::string convention;                   // "right": edge {h, h*s}
    std::vector<int> induced_from;            // original vertex ids for induced subgraphs
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Simple undirected graph: sorted adjacency lists plus per-vertex bit rows
// for word-parallel neighborhood intersections.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order) : n_(order), adj_(order), rows_(order, IndexSet(order)) {
        if (order < 0) throw std::invalid_argument("negative graph order");
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (rows_[u].test(v))
            throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return int(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const IndexSet& row(int v) const { return rows_[v]; }

    long long edge_count() const {
        long long e = 0;
        for (const auto& a : adj_) e += (long long)a.size();
        return e / 2;
    }

    // Valency if the graph is regular.
    std::optional<int> regular_valency() const {
        if (n_ == 0) return std::nullopt;
        int k = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != k) return std::nullopt;
        return k;
    }

    const std::optional<Provenance>& provenance() const { return prov_; }
    void set_provenance(Provenance p) { prov_ = std::move(p); }
    void clear_provenance() { prov_.reset(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.prov_ == b.prov_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<IndexSet> rows_;
    std::optional<Provenance> prov_;
};

} // namespace dicyclic
