// Command-line surface: exhaustive theorem verification, single-instance
// checks, named distance-regular families, isomorphism tests, and exports.
//
// Exit codes: 0 = success / theorem holds, 1 = usage or input error,
//             2 = mathematical violation found.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dicyclic/cayley.hpp"
#include "dicyclic/canon.hpp"
#include "dicyclic/drg.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/io.hpp"
#include "dicyclic/named.hpp"
#include "dicyclic/verify.hpp"

namespace {

using namespace dicyclic;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

int run_verify(int min_n, int max_n, int jobs, int cap, bool deterministic, bool group_by_iso,
               const std::string& out_path) {
    VerifyOptions opts;
    opts.jobs = jobs;
    opts.deterministic = deterministic;
    opts.n_cap = cap;
    opts.group_by_iso = group_by_iso;
    const VerificationReport report = verify_theorem(min_n, max_n, opts);

    std::uint64_t minimal = 0, drg = 0, violations = 0;
    for (const auto& grp : report.groups) {
        minimal += grp.minimal;
        drg += grp.drg.size();
        violations += grp.violations.size();
        std::cout << grp.group_spec << " (n=" << grp.n << "): atoms " << grp.atom_count
                  << ", scanned " << grp.scanned << ", generating " << grp.generating
                  << ", minimal " << grp.minimal << ", drg " << grp.drg.size() << ", violations "
                  << grp.violations.size();
        if (!deterministic) std::cout << ", " << grp.elapsed_ms << " ms";
        std::cout << "\n";
    }
    std::cout << report.groups.size() << " group(s), " << minimal << " minimal sets, " << drg
              << " DRG";
    if (violations == 0 && report.theorem_holds && drg > 0) std::cout << ", all ≅ K4,4";
    std::cout << "\n";
    std::cout << (report.theorem_holds ? "theorem holds" : "THEOREM VIOLATED") << "\n";

    if (!out_path.empty())
        write_text(out_path, report_to_json(report, group_by_iso).dump(2) + "\n");
    return verdict_exit_code(report);
}

int run_check(const std::string& group_spec, const std::string& set_spec) {
    const GroupTable g = parse_group_spec(group_spec);
    const ConnectionSet s = parse_connection_set(g, set_spec);
    const auto mw = minimality_witnesses(g, s);
    const Graph graph = cayley_graph(g, s);
    const auto verdict = intersection_array(graph);

    std::vector<std::string> parts;
    if (!mw.generates) {
        parts.push_back("not generating");
        parts.push_back("disconnected");
    } else {
        parts.push_back(verdict.is_drg ? "DRG " + verdict.array->to_string()
                                       : "not DRG (" + verdict.note + ")");
        parts.push_back(mw.witnesses.empty()
                            ? "not minimal"
                            : "minimal (witnesses: " + std::to_string(mw.witnesses.size()) + ")");
        if (g.order() == 8)
            parts.push_back(is_isomorphic(graph, complete_bipartite(4)) ? "≅ K4,4"
                                                                        : "not ≅ K4,4");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "; " : "") << parts[i];
    std::cout << "\n";

    std::cout << "group: " << g.spec_string() << " of order " << g.order() << ", |S| = "
              << s.size() << "\n";
    if (!mw.witnesses.empty()) {
        std::cout << "witnesses:";
        for (int w : mw.witnesses) std::cout << ' ' << format_element(g.base(), g.label(w));
        std::cout << "\n";
    }
    if (!verdict.is_drg && verdict.witness) {
        const auto& w = *verdict.witness;
        std::cout << "failure witness at distance " << w.distance << ": (c,a,b) of ("
                  << w.first.u << "," << w.first.v << ") = (" << w.first.c << "," << w.first.a
                  << "," << w.first.b << ") vs (" << w.second.u << "," << w.second.v << ") = ("
                  << w.second.c << "," << w.second.a << "," << w.second.b << ")\n";
    }
    const auto amply = amply_regular_params(graph);
    if (amply.ok) {
        std::cout << "amply regular: (n,k,lambda,mu) = (" << amply.n << "," << amply.k << ","
                  << amply.lambda << "," << amply.mu << ")";
        if (amply.no_distance2_pairs) std::cout << " [no distance-2 pairs]";
        std::cout << "\n";
    } else {
        std::cout << "not amply regular: " << amply.note << "\n";
    }
    if (verdict.is_drg) {
        const auto prof = primitivity_profile(graph);
        std::cout << "primitivity: {primitive: " << (prof.primitive ? "true" : "false")
                  << ", bipartite: " << (prof.bipartite ? "true" : "false")
                  << ", antipodal: " << (prof.antipodal ? "true" : "false") << "}";
        if (verdict.array->d == 1) std::cout << " (antipodal false by convention at diameter 1)";
        std::cout << "\n";
    }
    return 0;
}

int run_named(const std::string& name) {
    const Graph g = named_graph(name);
    std::cout << g.order() << " vertices, ";
    const auto valency = g.regular_valency();
    if (valency) std::cout << *valency << "-regular";
    else std::cout << "irregular";
    const auto verdict = intersection_array(g);
    if (verdict.is_drg) {
        if (verdict.array->d == 2) {
            const auto srg = strongly_regular_params(g);
            std::cout << ", SRG(" << srg.n << "," << srg.k << "," << srg.lambda << "," << srg.mu
                      << ")";
        }
        std::cout << ", array " << verdict.array->to_string();
    } else {
        std::cout << ", not distance-regular (" << verdict.note << ")";
    }
    std::cout << "\n";
    return 0;
}

int run_iso(const std::string& name1, const std::string& name2) {
    const Graph g1 = named_graph(name1);
    const Graph g2 = named_graph(name2);
    const bool iso = is_isomorphic(g1, g2);
    if (iso) {
        std::cout << "true\n";
    } else {
        const auto v1 = intersection_array(g1);
        const auto v2 = intersection_array(g2);
        if (v1.is_drg && v2.is_drg && *v1.array == *v2.array)
            std::cout << "false (arrays equal: " << v1.array->to_string() << ")\n";
        else
            std::cout << "false\n";
    }
    std::cout << "certificate 1: " << canonical_form(g1).hex() << "\n";
    std::cout << "certificate 2: " << canonical_form(g2).hex() << "\n";
    return 0;
}

int run_export(const std::string& name, const std::string& group_spec,
               const std::string& set_spec, const std::string& format,
               const std::string& out_path) {
    Graph g;
    if (!name.empty() && group_spec.empty()) {
        g = named_graph(name);
    } else if (name.empty() && !group_spec.empty() && !set_spec.empty()) {
        const GroupTable table = parse_group_spec(group_spec);
        g = cayley_graph(table, parse_connection_set(table, set_spec));
    } else {
        throw std::invalid_argument("export needs either a graph name or --group with --set");
    }
    if (format == "dot") write_text(out_path, graph_to_dot(g));
    else write_text(out_path, graph_to_json(g).dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley graphs of generalized dicyclic groups: distance-regularity analytics "
                 "and exhaustive classification checks"};
    app.require_subcommand(1);

    int min_n = 2, max_n = 2, jobs = 0, cap = dicyclic::kDefaultVerifyCap;
    bool deterministic = false, group_by_iso = false;
    std::string out_path, group_spec, set_spec, name, name2, format = "json";

    auto* verify = app.add_subcommand(
        "verify", "scan all minimal connection sets of every generalized dicyclic group of "
                  "order 4n, n in [min-n, max-n]");
    verify->add_option("--min-n", min_n, "smallest n (>= 2)")->required();
    verify->add_option("--max-n", max_n, "largest n")->required();
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_option("--cap", cap, "largest allowed n (default 12, hard limit 16)");
    verify->add_flag("--deterministic", deterministic, "zero timing fields for byte-stable output");
    verify->add_flag("--group-by-iso", group_by_iso,
                     "group distance-regular instances by canonical certificate in the report");
    verify->add_option("--out", out_path, "write the JSON report to this file");

    auto* check = app.add_subcommand("check", "analyze one Cayley graph Cay(G, S)");
    check->add_option("--group", group_spec, "group spec, e.g. dicyclic:4 or abelian:6")->required();
    check->add_option("--set", set_spec, "connection set, e.g. \"(1);(3);t*(0);t*(2)\"")->required();

    auto* named = app.add_subcommand("named", "print order, valency and intersection array");
    named->add_option("name", name,
                      "complete:n | kmm:m | cycle:n | hamming:d,q | shrikhande | doob:n,m")
        ->required();

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two named graphs");
    iso->add_option("first", name, "first graph name")->required();
    iso->add_option("second", name2, "second graph name")->required();

    auto* exp = app.add_subcommand("export", "write a graph as DOT or JSON");
    exp->add_option("name", name, "named graph to export");
    exp->add_option("--group", group_spec, "group spec for a Cayley graph export");
    exp->add_option("--set", set_spec, "connection set for a Cayley graph export");
    exp->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (verify->parsed())
            return run_verify(min_n, max_n, jobs, cap, deterministic, group_by_iso, out_path);
        if (check->parsed()) return run_check(group_spec, set_spec);
        if (named->parsed()) return run_named(name);
        if (iso->parsed()) return run_iso(name, name2);
        if (exp->parsed()) return run_export(name, group_spec, set_spec, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
