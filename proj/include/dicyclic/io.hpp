#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "group.hpp"
#include "verify.hpp"

namespace dicyclic {

using json = nlohmann::ordered_json;

inline json provenance_to_json(const Provenance& p) {
    json j = json::object();
    if (!p.group.empty()) j["group"] = p.group;
    if (!p.connection_set.empty()) j["set"] = p.connection_set;
    if (!p.convention.empty()) j["convention"] = p.convention;
    if (!p.induced_from.empty()) j["induced_from"] = p.induced_from;
    return j;
}

// {"order": N, "adj": [[sorted ints]...], "provenance": {...}|null}
inline json graph_to_json(const Graph& g) {
    json j;
    j["order"] = g.order();
    json adj = json::array();
    for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
    j["adj"] = std::move(adj);
    j["provenance"] = g.provenance() ? provenance_to_json(*g.provenance()) : json(nullptr);
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("adj"))
        throw std::invalid_argument("graph JSON needs \"order\" and \"adj\"");
    const int n = j.at("order").get<int>();
    const auto& adj = j.at("adj");
    if (!adj.is_array() || int(adj.size()) != n)
        throw std::invalid_argument("\"adj\" must list exactly \"order\" rows");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        int prev = -1;
        for (const auto& uj : adj[v]) {
            const int u = uj.get<int>();
            if (u <= prev) throw std::invalid_argument("adjacency rows must be strictly ascending");
            prev = u;
            if (u > v) {
                g.add_edge(v, u); // validates range, loops, duplicates
            }
        }
    }
    // symmetry: every recorded neighbor must have produced the edge
    for (int v = 0; v < n; ++v) {
        std::vector<int> row;
        for (const auto& uj : adj[v]) row.push_back(uj.get<int>());
        if (row != g.neighbors(v)) throw std::invalid_argument("adjacency is not symmetric");
    }
    if (j.contains("provenance") && !j.at("provenance").is_null()) {
        const auto& pj = j.at("provenance");
        Provenance p;
        if (pj.contains("group")) p.group = pj.at("group").get<std::string>();
        if (pj.contains("set")) p.connection_set = pj.at("set").get<std::vector<std::string>>();
        if (pj.contains("convention")) p.convention = pj.at("convention").get<std::string>();
        if (pj.contains("induced_from"))
            p.induced_from = pj.at("induced_from").get<std::vector<int>>();
        g.set_provenance(std::move(p));
    }
    return g;
}

// Undirected DOT; vertex labels are element text forms when the graph carries
// group provenance.
inline std::string graph_to_dot(const Graph& g) {
    std::vector<std::string> labels(g.order());
    if (g.provenance() && !g.provenance()->group.empty()) {
        const GroupTable table = parse_group_spec(g.provenance()->group);
        const auto& from = g.provenance()->induced_from;
        for (int v = 0; v < g.order(); ++v) {
            const int orig = from.empty() ? v : from[v];
            labels[v] = format_element(table.base(), table.label(orig));
        }
    }
    std::string out = "graph {\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (!labels[v].empty()) out += " [label=\"" + labels[v] + "\"]";
        out += ";\n";
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (v > u) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

inline json verdict_to_json(const RegularityVerdict& v) {
    json j;
    if (v.is_drg) {
        j["status"] = "distance-regular";
        j["array"] = v.array->to_string();
    } else {
        j["status"] = "failure";
        j["note"] = v.note;
        if (v.witness) {
            const auto& w = *v.witness;
            j["witness"] = {{"distance", w.distance},
                            {"pairs", {{w.first.u, w.first.v}, {w.second.u, w.second.v}}},
                            {"triples",
                             {{w.first.c, w.first.a, w.first.b},
                              {w.second.c, w.second.a, w.second.b}}}};
        } else {
            j["witness"] = nullptr;
        }
    }
    return j;
}

inline json instance_to_json(const InstanceRecord& rec) {
    json j;
    j["set"] = rec.set_texts;
    j["witnesses"] = rec.witness_texts;
    j["verdict"] = verdict_to_json(rec.verdict);
    switch (rec.iso_k44) {
        case IsoK44::yes: j["iso_k44"] = true; break;
        case IsoK44::no: j["iso_k44"] = false; break;
        case IsoK44::not_applicable: j["iso_k44"] = nullptr; break;
    }
    json claims = json::array();
    for (const auto& c : rec.claim_checks) {
        json cj;
        cj["id"] = c.id;
        cj["witness"] = c.witness >= 0 ? json(c.witness_text) : json(nullptr);
        cj["case"] = c.witness_part == 'A'   ? json("A")
                     : c.witness_part == 't' ? json("tA")
                                             : json(nullptr);
        cj["status"] = c.status == ClaimStatus::pass ? "pass"
                       : c.status == ClaimStatus::fail ? "fail"
                                                       : "n-a";
        cj["detail"] = c.detail;
        claims.push_back(std::move(cj));
    }
    j["claim_checks"] = std::move(claims);
    if (rec.primitivity)
        j["primitivity"] = {{"primitive", rec.primitivity->primitive},
                            {"bipartite", rec.primitivity->bipartite},
                            {"antipodal", rec.primitivity->antipodal}};
    return j;
}

inline json report_to_json(const VerificationReport& report, bool iso_classes = false) {
    json j;
    j["range"] = {report.n_min, report.n_max};
    json groups = json::array();
    for (const auto& grp : report.groups) {
        json gj;
        gj["n"] = grp.n;
        gj["group"] = grp.group_spec;
        gj["atoms"] = grp.atom_count;
        gj["scanned"] = grp.scanned;
        gj["generating"] = grp.generating;
        gj["minimal"] = grp.minimal;
        json drg = json::array();
        for (const auto& rec : grp.drg) drg.push_back(instance_to_json(rec));
        gj["drg"] = std::move(drg);
        json viol = json::array();
        for (const auto& rec : grp.violations) {
            json vj;
            vj["set"] = rec.set_texts;
            std::vector<std::string> reasons;
            if (rec.verdict.is_drg && rec.iso_k44 != IsoK44::yes)
                reasons.push_back("distance-regular but not isomorphic to K4,4");
            for (const auto& c : rec.claim_checks)
                if (c.status == ClaimStatus::fail)
                    reasons.push_back(c.id + " failed: " + c.detail);
            vj["reasons"] = reasons;
            vj["record"] = instance_to_json(rec);
            viol.push_back(std::move(vj));
        }
        gj["violations"] = std::move(viol);
        gj["elapsed_ms"] = grp.elapsed_ms;
        if (iso_classes) {
            json classes = json::array();
            std::vector<std::string> seen;
            for (const auto& rec : grp.drg) {
                auto it = std::find(seen.begin(), seen.end(), rec.certificate_hex);
                if (it == seen.end()) {
                    seen.push_back(rec.certificate_hex);
                    classes.push_back({{"certificate", rec.certificate_hex},
                                       {"count", 1},
                                       {"sets", json::array({rec.set_texts})}});
                } else {
                    auto& cj = classes[it - seen.begin()];
                    cj["count"] = cj["count"].get<int>() + 1;
                    cj["sets"].push_back(rec.set_texts);
                }
            }
            gj["iso_classes"] = std::move(classes);
        }
        groups.push_back(std::move(gj));
    }
    j["groups"] = std::move(groups);
    j["theorem_holds"] = report.theorem_holds;
    return j;
}

} // namespace dicyclic
