#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "group.hpp"

namespace dicyclic {

// Validated inverse-closed subset S of G \ {1}. Rejects bad input instead of
// silently closing it.
class ConnectionSet {
public:
    ConnectionSet(const GroupTable& g, std::vector<int> elements) : group_(&g) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        mask_ = IndexSet(g.order());
        for (int e : elements) {
            if (e < 0 || e >= g.order())
                throw std::invalid_argument("element index " + std::to_string(e) + " out of range");
            if (e == GroupTable::kIdentity)
                throw std::invalid_argument("connection set contains the identity");
            mask_.set(e);
        }
        for (int e : elements) {
            if (!mask_.test(g.inv(e)))
                throw std::invalid_argument(
                    "connection set is not inverse-closed: missing " +
                    format_element(g.base(), g.label(g.inv(e))) + ", the inverse of " +
                    format_element(g.base(), g.label(e)));
        }
        members_ = std::move(elements);
    }

    const GroupTable& group() const { return *group_; }
    const std::vector<int>& members() const { return members_; }
    const IndexSet& mask() const { return mask_; }
    bool contains(int e) const { return mask_.test(e); }
    int size() const { return int(members_.size()); }

    std::vector<std::string> element_texts() const {
        std::vector<std::string> out;
        out.reserve(members_.size());
        for (int e : members_) out.push_back(format_element(group_->base(), group_->label(e)));
        return out;
    }

private:
    const GroupTable* group_;
    std::vector<int> members_;
    IndexSet mask_;
};

inline ConnectionSet connection_set(const GroupTable& g, const std::vector<int>& elements) {
    return ConnectionSet(g, elements);
}

// Semicolon-separated element tokens, e.g. "(1);(3);t*(0);t*(2)".
inline ConnectionSet parse_connection_set(const GroupTable& g, std::string_view text) {
    std::vector<int> elems;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        if (token.empty()) throw parse_error(int(start), "element token");
        try {
            elems.push_back(g.index_of(parse_element(g.base(), token)));
        } catch (const parse_error& e) {
            throw parse_error(int(start) + e.position, e.expected);
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return ConnectionSet(g, elems);
}

// Cay(G, S): vertex set = element indices, edge {g, h} iff g = h*s for some
// s in S (right-multiplication convention).
inline Graph cayley_graph(const GroupTable& g, const ConnectionSet& s) {
    Graph graph(g.order());
    for (int h = 0; h < g.order(); ++h)
        for (int e : s.members()) {
            int v = g.mul(h, e);
            if (v > h) graph.add_edge(h, v);
        }
    Provenance prov;
    prov.group = g.spec_string();
    prov.connection_set = s.element_texts();
    prov.convention = "right";
    graph.set_provenance(std::move(prov));
    return graph;
}

struct MinimalityResult {
    bool generates = false;
    std::vector<int> witnesses; // all s in S with <S \ {s, s^-1}> proper, ascending
};

inline MinimalityResult minimality_witnesses(const GroupTable& g, const ConnectionSet& s) {
    MinimalityResult r;
    r.generates = generated_subgroup(g, s.members()).size() == g.order();
    std::vector<char> proper(g.order(), 0), known(g.order(), 0);
    for (int e : s.members()) {
        if (!known[e]) {
            std::vector<int> rest;
            for (int o : s.members())
                if (o != e && o != g.inv(e)) rest.push_back(o);
            bool p = generated_subgroup(g, rest).size() != g.order();
            proper[e] = proper[g.inv(e)] = p;
            known[e] = known[g.inv(e)] = 1;
        }
        if (proper[e]) r.witnesses.push_back(e);
    }
    return r;
}

// Subgraph on the given vertices, reindexed; original ids recorded in the
// provenance so exported labels stay meaningful.
inline Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(g.order()) + ")");
    Graph sub(int(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) sub.add_edge(int(i), int(j));
    Provenance prov = g.provenance() ? *g.provenance() : Provenance{};
    if (prov.induced_from.empty()) {
        prov.induced_from = vertices;
    } else {
        std::vector<int> orig;
        orig.reserve(vertices.size());
        for (int v : vertices) orig.push_back(prov.induced_from[v]);
        prov.induced_from = std::move(orig);
    }
    sub.set_provenance(std::move(prov));
    return sub;
}

} // namespace dicyclic
