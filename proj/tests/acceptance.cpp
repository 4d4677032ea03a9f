// Acceptance suite. Runs each gate end to end, prints one line per
// criterion, and exits with the number of failures.
//
// usage: acceptance <path-to-drgtool> <golden-dir>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dicyclic/canon.hpp"
#include "dicyclic/cayley.hpp"
#include "dicyclic/drg.hpp"
#include "dicyclic/io.hpp"
#include "dicyclic/named.hpp"
#include "dicyclic/verify.hpp"
#include "oracles.hpp"

using namespace dicyclic;

namespace {

std::string g_tool;
std::string g_golden_dir;
int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_tool(const std::string& args) {
    const std::string cmd = g_tool + " " + args;
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int idx(const GroupTable& g, const char* text) {
    return g.index_of(parse_element(g.base(), text));
}

// ---- criterion 1: theorem reproduction at desk scale ------------------------

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.deterministic = true;
    const auto rep = verify_theorem(2, 6, opts);
    const double secs = seconds_since(start);

    bool ok = rep.theorem_holds;
    std::uint64_t drg_n2 = 0;
    for (const auto& grp : rep.groups) {
        if (grp.n == 2) drg_n2 += grp.drg.size();
        else if (!grp.drg.empty()) ok = false;
        for (const auto& rec : grp.drg) {
            if (rec.iso_k44 != IsoK44::yes) ok = false;
            if (rec.verdict.array->to_string() != "{4,3; 1,4}") ok = false;
        }
    }
    if (drg_n2 < 1) ok = false;
    if (secs >= 60.0) ok = false;

    // same run through the CLI, against the golden report
    std::string cli = "n/a";
    if (!g_tool.empty()) {
        const int rc =
            run_tool("verify --min-n 2 --max-n 6 --deterministic --out acc_c1.json >/dev/null");
        const std::string got = slurp("acc_c1.json");
        const std::string want = slurp(g_golden_dir + "/verify_2_6.json");
        const bool cli_ok = rc == 0 && !want.empty() && got == want;
        if (!cli_ok) ok = false;
        cli = cli_ok ? "exit 0, report matches golden" : "exit/golden mismatch";
    }
    std::ostringstream d;
    d << "verify(2..6): theorem_holds=" << (rep.theorem_holds ? "true" : "false") << ", drg(n=2)="
      << drg_n2 << " all K4,4 {4,3; 1,4}, drg(n=3..6)=0, " << cli << ", " << secs << "s";
    report(1, ok, d.str());
}

// ---- criterion 2: stretch verification to n = 10 ----------------------------

void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    const auto rep = verify_theorem(2, 10, {});
    const double secs = seconds_since(start);
    bool ok = rep.theorem_holds && secs < 600.0;
    for (const auto& grp : rep.groups)
        if (grp.n > 2 && !grp.drg.empty()) ok = false;
    std::uint64_t minimal = 0;
    for (const auto& grp : rep.groups) minimal += grp.minimal;
    std::ostringstream d;
    d << "verify(2..10): theorem_holds=" << (rep.theorem_holds ? "true" : "false") << ", "
      << rep.groups.size() << " groups, " << minimal << " minimal sets, " << secs << "s";
    report(2, ok, d.str());
}

// ---- criterion 3: Q8 census against the raw subset oracle -------------------

void criterion_3() {
    GroupTable g = GroupTable::generalized_dicyclic(AbelianGroup({4}));
    std::set<std::vector<int>> via_atoms;
    enumerate_minimal_sets(g, [&](const ConnectionSet& s, std::vector<int>) {
        via_atoms.insert(s.members());
    });

    std::set<std::vector<int>> raw;
    const int n = g.order();
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> elems;
        for (int e = 1; e < n; ++e)
            if (mask >> (e - 1) & 1) elems.push_back(e);
        bool closed = true;
        for (int e : elems)
            if (!(mask >> (g.inv(e) - 1) & 1)) { closed = false; break; }
        if (!closed) continue;
        if (oracles::closure_by_products(g, elems).size() != std::size_t(n)) continue;
        bool witnessed = false;
        for (int e : elems) {
            std::vector<int> rest;
            for (int o : elems)
                if (o != e && o != g.inv(e)) rest.push_back(o);
            if (oracles::closure_by_products(g, rest).size() != std::size_t(n)) witnessed = true;
        }
        if (witnessed) raw.insert(elems);
    }
    const bool ok = via_atoms.size() == 6 && via_atoms == raw;
    report(3, ok,
           "Q8: " + std::to_string(via_atoms.size()) + " minimal sets from atoms, " +
               std::to_string(raw.size()) + " from the raw 2^7 scan, families " +
               (via_atoms == raw ? "equal" : "DIFFER"));
}

// ---- criterion 4: the two explicit K4,4 constructions -----------------------

void criterion_4() {
    GroupTable g = GroupTable::generalized_dicyclic(AbelianGroup({4}));
    bool ok = true;
    std::string arrays;
    for (const char* set_text : {"(1);(3);t*(0);t*(2)", "t*(0);t*(2);t*(1);t*(3)"}) {
        ConnectionSet s = parse_connection_set(g, set_text);
        Graph graph = cayley_graph(g, s);
        auto v = intersection_array(graph);
        const bool drg = v.is_drg;
        const bool iso = is_isomorphic(graph, complete_bipartite(4));
        if (!drg || !iso) ok = false;
        arrays += (drg ? v.array->to_string() : "failure") + " ";
    }
    // o(x) = 4 for the abelian generator in the first set
    if (g.element_order(idx(g, "(1)")) != 4) ok = false;
    report(4, ok, "Cay(Q8,{x,x^3,t,t^-1}) and Cay(Q8,{t,t^-1,tx,tx^-1}): arrays " + arrays +
                      (ok ? "both DRG and isomorphic to K4,4" : "MISMATCH"));
}

// ---- criterion 5: named-family oracle ---------------------------------------

void criterion_5() {
    bool ok = true;
    std::string note;
    for (auto [d, q] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 4}, {2, 2}}) {
        auto v = intersection_array(hamming_graph(d, q));
        if (!v.is_drg || v.array->d != d) { ok = false; continue; }
        for (int i = 1; i <= d; ++i)
            if (v.array->c[i - 1] != i) ok = false;
        for (int i = 0; i < d; ++i)
            if (v.array->b[i] != (d - i) * (q - 1)) ok = false;
    }
    auto srg = strongly_regular_params(shrikhande_graph());
    if (!(srg.ok && srg.n == 16 && srg.k == 6 && srg.lambda == 2 && srg.mu == 2)) ok = false;

    auto vd = intersection_array(doob_graph(1, 1));
    auto vh = intersection_array(hamming_graph(3, 4));
    const bool arrays_equal =
        vd.is_drg && vh.is_drg && *vd.array == *vh.array && vd.array->to_string() == "{9,6,3; 1,2,3}";
    const bool non_iso = !is_isomorphic(doob_graph(1, 1), hamming_graph(3, 4));
    if (!arrays_equal || !non_iso) ok = false;
    report(5, ok,
           std::string("hamming arrays exact, shrikhande SRG(16,6,2,2), doob(1,1) ") +
               (arrays_equal ? "= {9,6,3; 1,2,3} = hamming(3,4)" : "array MISMATCH") +
               (non_iso ? ", non-isomorphic" : ", ISOMORPHIC?"));
}

// ---- criteria 6 and 7: lemma suites and claim cross-checks over n <= 6 ------

void criteria_6_and_7() {
    std::uint64_t sets = 0, structural = 0, conditional = 0, coset_pairs = 0;
    std::uint64_t structural_fail = 0, conditional_fail = 0, coset_fail = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const AbelianGroup& a : abelian_groups_with_unique_involution(2 * n)) {
            GroupTable g = GroupTable::generalized_dicyclic(a);
            enumerate_minimal_sets(g, [&](const ConnectionSet& s, std::vector<int> witnesses) {
                ++sets;
                InstanceRecord rec = classify_instance(g, s);
                for (const auto& c : rec.claim_checks) {
                    if (c.id == "lemma-tA" || c.id == "lemma-A-i") {
                        ++structural;
                        if (c.status != ClaimStatus::pass) ++structural_fail;
                    } else {
                        ++conditional;
                        if (c.status == ClaimStatus::fail) ++conditional_fail;
                    }
                }
                // coset-induced subgraphs are isomorphic for H = <S \ {s,s^-1}>
                Graph graph = cayley_graph(g, s);
                for (int w : witnesses) {
                    if (w != *std::min_element(witnesses.begin(), witnesses.end())) continue;
                    std::vector<int> rest;
                    for (int o : s.members())
                        if (o != w && o != g.inv(w)) rest.push_back(o);
                    auto blocks = left_cosets(g, generated_subgroup(g, rest));
                    Graph first = induced_subgraph(graph, blocks[0]);
                    for (std::size_t i = 1; i < blocks.size(); ++i) {
                        ++coset_pairs;
                        if (!is_isomorphic(first, induced_subgraph(graph, blocks[i])))
                            ++coset_fail;
                    }
                }
            });
        }
    }
    {
        std::ostringstream d;
        d << sets << " minimal sets over n=2..6: " << structural << " structural lemma checks, "
          << structural_fail << " failures; " << coset_pairs << " coset-subgraph pairs, "
          << coset_fail << " non-isomorphic";
        report(6, structural_fail == 0 && coset_fail == 0 && sets > 0, d.str());
    }
    {
        // exit-code contract: 0 when clean, 2 on violation, 1 on usage error
        bool exit_ok = true;
        std::string cli = "library-only";
        if (!g_tool.empty()) {
            const int rc_bad = run_tool("verify --min-n 1 --max-n 2 >/dev/null 2>&1");
            const int rc_good = run_tool("verify --min-n 2 --max-n 3 >/dev/null");
            exit_ok = rc_bad == 1 && rc_good == 0;
            cli = "usage error exit " + std::to_string(rc_bad) + ", clean run exit " +
                  std::to_string(rc_good);
        }
        VerificationReport fake;
        fake.theorem_holds = false;
        if (verdict_exit_code(fake) != 2) exit_ok = false;
        std::ostringstream d;
        d << conditional << " DRG-conditional claim checks, " << conditional_fail
          << " failures; violation exit code 2; " << cli;
        report(7, conditional_fail == 0 && exit_ok, d.str());
    }
}

// ---- criterion 8: primitivity profile of K4,4 -------------------------------

void criterion_8() {
    const auto prof = primitivity_profile(complete_bipartite(4));
    const bool ok = prof == PrimitivityProfile{false, true, true};
    std::ostringstream d;
    d << "K4,4: {primitive: " << (prof.primitive ? "true" : "false")
      << ", bipartite: " << (prof.bipartite ? "true" : "false")
      << ", antipodal: " << (prof.antipodal ? "true" : "false") << "}";
    report(8, ok, d.str());
}

// ---- criterion 9: byte-identical reports across job counts ------------------

void criterion_9() {
    bool ok = true;
    std::string detail;
    if (!g_tool.empty()) {
        const int r1 = run_tool(
            "verify --min-n 2 --max-n 6 --jobs 1 --deterministic --out acc_j1.json >/dev/null");
        const int r8 = run_tool(
            "verify --min-n 2 --max-n 6 --jobs 8 --deterministic --out acc_j8.json >/dev/null");
        const std::string a = slurp("acc_j1.json");
        const std::string b = slurp("acc_j8.json");
        ok = r1 == 0 && r8 == 0 && !a.empty() && a == b;
        detail = std::string("--jobs 1 vs --jobs 8 reports ") +
                 (a == b && !a.empty() ? "byte-identical" : "DIFFER");
        const std::string want = slurp(g_golden_dir + "/verify_2_6.json");
        if (!want.empty() && a != want) { ok = false; detail += ", golden MISMATCH"; }
    } else {
        VerifyOptions seq, par;
        seq.jobs = 1;
        seq.deterministic = true;
        par.jobs = 8;
        par.deterministic = true;
        ok = report_to_json(verify_theorem(2, 6, seq)).dump(2) ==
             report_to_json(verify_theorem(2, 6, par)).dump(2);
        detail = "library-level reports byte-identical";
    }
    report(9, ok, detail);
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_tool = argv[1];
    if (argc > 2) g_golden_dir = argv[2];
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criteria_6_and_7();
    criterion_8();
    criterion_9();
    std::cout << (g_failures == 0 ? "all criteria passed" : "FAILURES: ") << (g_failures == 0 ? "" : std::to_string(g_failures))
              << std::endl;
    return g_failures;
}
