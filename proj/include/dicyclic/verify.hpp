#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "canon.hpp"
#include "cayley.hpp"
#include "drg.hpp"
#include "group.hpp"
#include "named.hpp"

namespace dicyclic {

inline constexpr int kDefaultVerifyCap = 12;
// Hard ceiling: element sets of a group of order 4n must fit one 64-bit word,
// and 2^(2n) atom subsets per group are infeasible far earlier anyway.
inline constexpr int kMaxVerifyN = 16;

// Inverse-closed cells of G \ {1}: the singleton {a} plus all pairs
// {g, g^-1}, ordered by smallest member. Every inverse-closed subset is a
// union of atoms, so subsets of the atom list enumerate them exactly once.
struct Atom {
    int rep = 0;     // smaller element index
    int partner = 0; // inverse; equals rep for the involution
    bool singleton() const { return rep == partner; }
};

struct AtomDecomposition {
    std::vector<Atom> atoms;
};

inline AtomDecomposition atom_decomposition(const GroupTable& g) {
    AtomDecomposition dec;
    std::vector<char> seen(g.order(), 0);
    for (int e = 1; e < g.order(); ++e) {
        if (seen[e]) continue;
        int i = g.inv(e);
        seen[e] = seen[i] = 1;
        dec.atoms.push_back({e, std::max(e, i)});
    }
    return dec;
}

enum class ClaimStatus { pass, fail, na };

struct ClaimResult {
    std::string id;
    int witness = -1;        // element index; -1 for set-level checks
    std::string witness_text;
    char witness_part = '-'; // 'A', 't', or '-'
    ClaimStatus status = ClaimStatus::na;
    std::string detail;
};

enum class IsoK44 { not_applicable, yes, no };

struct InstanceRecord {
    std::vector<int> set_elements;
    std::vector<std::string> set_texts;
    std::vector<int> witnesses;
    std::vector<std::string> witness_texts;
    RegularityVerdict verdict;
    IsoK44 iso_k44 = IsoK44::not_applicable;
    std::vector<ClaimResult> claim_checks;
    std::optional<PrimitivityProfile> primitivity;
    std::string certificate_hex; // filled when isomorphism-class grouping is on

    bool has_violation() const {
        if (verdict.is_drg && iso_k44 != IsoK44::yes) return true;
        for (const auto& c : claim_checks)
            if (c.status == ClaimStatus::fail) return true;
        return false;
    }
};

struct GroupScanReport {
    int n = 0;
    std::string group_spec;
    int atom_count = 0;
    std::uint64_t scanned = 0;
    std::uint64_t generating = 0;
    std::uint64_t minimal = 0;
    std::vector<InstanceRecord> drg;
    std::vector<InstanceRecord> violations;
    std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
    int n_min = 0, n_max = 0;
    std::vector<GroupScanReport> groups;
    bool theorem_holds = true;
};

struct VerifyOptions {
    int jobs = 0;             // 0 = hardware concurrency
    bool deterministic = false; // zero elapsed_ms fields
    int n_cap = kDefaultVerifyCap;
    bool group_by_iso = false; // compute canonical certificates of DRG instances
};

namespace verifydetail {

inline std::string elem_text(const GroupTable& g, int e) {
    return format_element(g.base(), g.label(e));
}

inline ClaimResult claim(const GroupTable& g, std::string id, int witness, char part, bool pass,
                         std::string detail) {
    return {std::move(id),         witness, witness >= 0 ? elem_text(g, witness) : std::string(),
            part,                  pass ? ClaimStatus::pass : ClaimStatus::fail,
            std::move(detail)};
}

inline ClaimResult claim_na(const GroupTable& g, std::string id, int witness, char part,
                            std::string detail) {
    return {std::move(id), witness, witness >= 0 ? elem_text(g, witness) : std::string(),
            part,          ClaimStatus::na,
            std::move(detail)};
}

// Checks for one removable generator s with H = <S \ {s, s^-1}>.
inline void witness_claims(const GroupTable& g, const ConnectionSet& s, int w,
                           const RegularityVerdict& verdict, const Graph& graph, IsoK44 iso,
                           std::vector<ClaimResult>& out) {
    const int order = g.order();
    const int winv = g.inv(w);
    std::vector<int> rest;
    for (int e : s.members())
        if (e != w && e != winv) rest.push_back(e);
    const Subgroup h = generated_subgroup(g, rest);
    const IntersectionArray* arr = verdict.array ? &*verdict.array : nullptr;

    if (!g.in_abelian_part(w)) {
        // every vertex of a coset gH has exactly two neighbors outside it,
        // namely v*s and v*s^-1
        std::string fail;
        auto cosets = left_cosets(g, h);
        std::vector<int> coset_of(order, -1);
        for (std::size_t b = 0; b < cosets.size(); ++b)
            for (int v : cosets[b]) coset_of[v] = int(b);
        for (int v = 0; v < order && fail.empty(); ++v) {
            std::vector<int> outside;
            for (int nb : graph.neighbors(v))
                if (coset_of[nb] != coset_of[v]) outside.push_back(nb);
            std::vector<int> expect{g.mul(v, w), g.mul(v, winv)};
            std::sort(expect.begin(), expect.end());
            if (outside != expect)
                fail = "vertex " + elem_text(g, v) + " has " + std::to_string(outside.size()) +
                       " neighbors outside its coset";
        }
        out.push_back(claim(g, "lemma-tA", w, 't', fail.empty(),
                            fail.empty() ? "[G:H]=" + std::to_string(h.index_in_g) : fail));

        if (!verdict.is_drg) {
            out.push_back(claim_na(g, "subcase-tA", w, 't', "not distance-regular"));
            return;
        }
        std::string f;
        std::string shape;
        if (iso != IsoK44::yes) f = "graph is not isomorphic to K4,4";
        else if (s.size() != 4) f = "|S| = " + std::to_string(s.size()) + " != 4";
        else if (g.involution() >= 0 && s.contains(g.involution())) f = "s^2 = a lies in S";
        else if (rest.size() != 2 || g.inv(rest[0]) != rest[1]) f = "S \\ {s,s^-1} is not one inverse pair";
        else if (arr->a[1] != 0) f = "a1 = " + std::to_string(arr->a[1]) + " != 0";
        else if (arr->d < 2 || arr->c[1] != 4) f = "c2 != 4";
        else if (g.in_abelian_part(rest[0])) {
            if (g.mul(rest[0], rest[0]) != g.involution())
                f = "abelian pair element does not square to a";
            else shape = "S = {x,x^-1,s,s^-1} with x^2 = a";
        } else {
            shape = "S = {s,s^-1,sy,(sy)^-1}";
        }
        out.push_back(claim(g, "subcase-tA", w, 't', f.empty(), f.empty() ? shape : f));
        return;
    }

    // removable generator inside the abelian part
    const int os = g.element_order(w);
    const int m = order / h.size();
    std::vector<int> coset_of(order, -1);
    {
        std::string fail;
        if (os <= 2) fail = "o(s) = " + std::to_string(os) + " <= 2";
        if (fail.empty() && os % m != 0)
            fail = "o(s) = " + std::to_string(os) + " is not a multiple of [G:H] = " +
                   std::to_string(m);
        if (fail.empty()) {
            for (int i = 0; i < m && fail.empty(); ++i) {
                const int p = g.power(w, i);
                for (int hh : h.members) {
                    const int v = g.mul(p, hh);
                    if (coset_of[v] != -1) { fail = "cosets s^iH overlap"; break; }
                    coset_of[v] = i;
                }
            }
            for (int v = 0; v < order && fail.empty(); ++v)
                if (coset_of[v] == -1) fail = "cosets s^iH do not cover G";
        }
        if (fail.empty()) {
            for (int v = 0; v < order && fail.empty(); ++v) {
                std::vector<int> outside;
                for (int nb : graph.neighbors(v))
                    if (coset_of[nb] != coset_of[v]) outside.push_back(nb);
                const int i = coset_of[v];
                const int hh = g.mul(g.inv(g.power(w, i)), v);
                std::vector<int> expect{g.mul(g.power(w, i - 1), hh), g.mul(g.power(w, i + 1), hh)};
                std::sort(expect.begin(), expect.end());
                std::vector<int> via_s{g.mul(v, w), g.mul(v, winv)};
                std::sort(via_s.begin(), via_s.end());
                if (expect.size() == 2 && expect[0] == expect[1])
                    fail = "s^{i-1}h = s^{i+1}h at " + elem_text(g, v);
                else if (via_s != expect)
                    fail = "neighbors of " + elem_text(g, v) + " outside s^iH are not s^{i+-1}h";
                else if (outside != expect)
                    fail = "vertex " + elem_text(g, v) + " has " + std::to_string(outside.size()) +
                           " neighbors outside its coset";
            }
        }
        if (fail.empty()) {
            const bool collapse = h.contains(g.mul(w, w)); // s^{i-1}H == s^{i+1}H
            const bool rhs = (m == 2 && os >= 4);
            if (collapse != rhs)
                fail = std::string("coset collapse ") + (collapse ? "holds" : "fails") +
                       " but [G:H]=2 and o(s)>=4 " + (rhs ? "holds" : "fails");
        }
        out.push_back(claim(g, "lemma-A-i", w, 'A', fail.empty(),
                            fail.empty() ? "[G:H]=" + std::to_string(m) + ", o(s)=" +
                                           std::to_string(os)
                                         : fail));
    }

    if (!verdict.is_drg) {
        for (const char* id : {"lemma-A-ii", "claim-1", "claim-2i", "claim-2ii", "claim-3", "claim-4"})
            out.push_back(claim_na(g, id, w, 'A', "not distance-regular"));
        return;
    }

    const int d = arr->d;
    {
        std::string fail;
        if (d < 2) fail = "diameter < 2";
        else if (arr->c[1] < 2) fail = "c2 = " + std::to_string(arr->c[1]) + " < 2";
        if (fail.empty()) {
            const Subgroup cyc = generated_subgroup(g, {w});
            const auto dp = detail::bfs(graph, GroupTable::kIdentity, false);
            for (int e : s.members()) {
                if (cyc.contains(e)) continue;
                const int sh = g.mul(w, e);
                if (dp.dist[sh] != 2) {
                    fail = "dist(1, s*h) = " + std::to_string(dp.dist[sh]) + " for h = " +
                           elem_text(g, e);
                    break;
                }
            }
        }
        out.push_back(claim(g, "lemma-A-ii", w, 'A', fail.empty(),
                            fail.empty() ? "c2 = " + std::to_string(arr->c[1]) : fail));
    }
    out.push_back(claim(g, "claim-1", w, 'A', m == 2 && os >= 4,
                        "[G:H]=" + std::to_string(m) + ", o(s)=" + std::to_string(os)));
    {
        const int a1 = arr->a[1];
        const bool s2_in = s.contains(g.mul(w, w));
        const bool ok = (a1 == 0 || a1 == 2) && ((a1 == 2) == s2_in);
        out.push_back(claim(g, "claim-2i", w, 'A', ok,
                            "a1=" + std::to_string(a1) + ", s^2 in S: " + (s2_in ? "yes" : "no")));
    }
    {
        const int c2 = d >= 2 ? arr->c[1] : -1;
        const bool ok = d >= 2 && (c2 == 2 || c2 == 4) && (os < 6 || c2 == 4);
        out.push_back(claim(g, "claim-2ii", w, 'A', ok,
                            "c2=" + std::to_string(c2) + ", o(s)=" + std::to_string(os)));
    }
    out.push_back(claim(g, "claim-3", w, 'A', os == 4, "o(s)=" + std::to_string(os)));
    out.push_back(claim(g, "claim-4", w, 'A', iso == IsoK44::yes,
                        iso == IsoK44::yes ? "isomorphic to K4,4" : "not isomorphic to K4,4"));
}

inline const Graph& k44_reference() {
    static const Graph k44 = complete_bipartite(4);
    return k44;
}

inline InstanceRecord classify_with(const GroupTable& g, const ConnectionSet& s,
                                    std::vector<int> witnesses, bool with_certificate) {
    InstanceRecord rec;
    rec.set_elements = s.members();
    rec.set_texts = s.element_texts();
    rec.witnesses = std::move(witnesses);
    for (int w : rec.witnesses) rec.witness_texts.push_back(elem_text(g, w));

    const Graph graph = cayley_graph(g, s);
    rec.verdict = intersection_array(graph);
    if (rec.verdict.is_drg) {
        // larger DRG hits are automatic counterexamples: |V| != 8 cannot be K4,4
        rec.iso_k44 = (g.order() == 8 && is_isomorphic(graph, k44_reference())) ? IsoK44::yes
                                                                                : IsoK44::no;
        rec.primitivity = primitivity_profile(graph);
        const bool complete =
            graph.edge_count() == (long long)graph.order() * (graph.order() - 1) / 2;
        rec.claim_checks.push_back(claim(g, "imprimitive-or-complete", -1, '-',
                                         !rec.primitivity->primitive || complete,
                                         rec.primitivity->primitive ? "primitive" : "imprimitive"));
        if (with_certificate) rec.certificate_hex = canonical_form(graph).hex();
    }
    for (int w : rec.witnesses)
        witness_claims(g, s, w, rec.verdict, graph, rec.iso_k44, rec.claim_checks);
    return rec;
}

// 64-bit element masks; requires group order <= 64.
struct MaskContext {
    const GroupTable* g = nullptr;
    std::vector<Atom> atoms;
    std::vector<std::uint64_t> atom_elems;
    std::vector<std::uint64_t> atom_closures;
    std::uint64_t full = 0;
    std::uint64_t t_part = 0; // elements outside the abelian part
};

inline std::uint64_t closure_mask(const GroupTable& g, std::uint64_t gens) {
    int gen_list[64];
    int ng = 0;
    for (std::uint64_t m = gens; m; m &= m - 1) gen_list[ng++] = std::countr_zero(m);
    std::uint64_t set = 1, todo = 1;
    while (todo) {
        const int e = std::countr_zero(todo);
        todo &= todo - 1;
        for (int i = 0; i < ng; ++i) {
            const std::uint64_t p = std::uint64_t(1) << g.mul(e, gen_list[i]);
            if (!(set & p)) { set |= p; todo |= p; }
        }
    }
    return set;
}

inline MaskContext make_mask_context(const GroupTable& g) {
    if (g.order() > 64)
        throw std::invalid_argument("mask enumeration supports group order <= 64, got " +
                                    std::to_string(g.order()));
    MaskContext ctx;
    ctx.g = &g;
    ctx.atoms = atom_decomposition(g).atoms;
    ctx.full = g.order() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.order()) - 1;
    for (int e = 0; e < g.order(); ++e)
        if (!g.in_abelian_part(e)) ctx.t_part |= std::uint64_t(1) << e;
    for (const Atom& a : ctx.atoms) {
        std::uint64_t elems = (std::uint64_t(1) << a.rep) | (std::uint64_t(1) << a.partner);
        ctx.atom_elems.push_back(elems);
        ctx.atom_closures.push_back(closure_mask(g, elems));
    }
    return ctx;
}

struct MaskScanStats {
    std::uint64_t scanned = 0, generating = 0, minimal = 0;
};

// Walks atom-subset bitmasks in [lo, hi) ascending and calls the sink for
// every minimal generating set. A subset with no atom outside the abelian
// part cannot generate; a subset whose atom closures already cover G needs no
// full closure. Everything else goes through a memoized table closure.
template <typename Sink>
void scan_mask_range(const MaskContext& ctx, std::uint64_t lo, std::uint64_t hi,
                     MaskScanStats& stats, Sink&& sink) {
    const GroupTable& g = *ctx.g;
    std::unordered_map<std::uint64_t, std::uint64_t> memo;
    constexpr std::size_t kMemoCap = 1u << 21;
    auto closure_of = [&](std::uint64_t elems) {
        auto it = memo.find(elems);
        if (it != memo.end()) return it->second;
        const std::uint64_t clo = closure_mask(g, elems);
        if (memo.size() < kMemoCap) memo.emplace(elems, clo);
        return clo;
    };
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++stats.scanned;
        std::uint64_t elems = 0, or_clos = 0;
        for (std::uint64_t mm = mask; mm; mm &= mm - 1) {
            const int b = std::countr_zero(mm);
            elems |= ctx.atom_elems[b];
            or_clos |= ctx.atom_closures[b];
        }
        if (!(or_clos & ctx.t_part)) continue;
        if (or_clos != ctx.full && closure_of(elems) != ctx.full) continue;
        ++stats.generating;
        std::uint64_t witness_elems = 0;
        for (std::uint64_t mm = mask; mm; mm &= mm - 1) {
            const int b = std::countr_zero(mm);
            std::uint64_t rem_or = 0;
            for (std::uint64_t m2 = mask & ~(std::uint64_t(1) << b); m2; m2 &= m2 - 1)
                rem_or |= ctx.atom_closures[std::countr_zero(m2)];
            if (rem_or == ctx.full) continue;
            if (!(rem_or & ctx.t_part) || closure_of(elems & ~ctx.atom_elems[b]) != ctx.full)
                witness_elems |= ctx.atom_elems[b];
        }
        if (!witness_elems) continue;
        ++stats.minimal;
        sink(mask, elems, witness_elems);
    }
}

inline std::vector<int> mask_to_elements(std::uint64_t mask) {
    std::vector<int> v;
    for (std::uint64_t m = mask; m; m &= m - 1) v.push_back(std::countr_zero(m));
    return v;
}

} // namespace verifydetail

// Claim cross-checks for a minimal generating connection set; results are
// report entries, never exceptions.
inline std::vector<ClaimResult> claim_checks(const GroupTable& g, const ConnectionSet& s,
                                             const std::vector<int>& witnesses,
                                             const RegularityVerdict& verdict,
                                             const Graph& graph, IsoK44 iso) {
    std::vector<ClaimResult> out;
    for (int w : witnesses) verifydetail::witness_claims(g, s, w, verdict, graph, iso, out);
    return out;
}

inline InstanceRecord classify_instance(const GroupTable& g, const ConnectionSet& s) {
    auto mw = minimality_witnesses(g, s);
    if (!mw.generates || mw.witnesses.empty())
        throw std::invalid_argument("classify_instance requires a minimal generating connection set");
    return verifydetail::classify_with(g, s, std::move(mw.witnesses), false);
}

// Streams every minimal inverse-closed generating connection set of G
// exactly once, in atom-bitmask order. fn(set, witnesses).
template <typename Fn>
void enumerate_minimal_sets(const GroupTable& g, Fn&& fn) {
    if (g.kind() != GroupKind::generalized_dicyclic)
        throw std::invalid_argument("enumeration requires a generalized dicyclic group");
    const auto ctx = verifydetail::make_mask_context(g);
    verifydetail::MaskScanStats stats;
    verifydetail::scan_mask_range(
        ctx, 0, std::uint64_t(1) << ctx.atoms.size(), stats,
        [&](std::uint64_t, std::uint64_t elems, std::uint64_t witness_elems) {
            fn(ConnectionSet(g, verifydetail::mask_to_elements(elems)),
               verifydetail::mask_to_elements(witness_elems));
        });
}

inline std::vector<ConnectionSet> minimal_connection_sets(const GroupTable& g) {
    std::vector<ConnectionSet> out;
    enumerate_minimal_sets(g, [&](ConnectionSet s, std::vector<int>) { out.push_back(std::move(s)); });
    return out;
}

inline GroupScanReport scan_group(const GroupTable& g, int n, const VerifyOptions& opts = {}) {
    using namespace verifydetail;
    const auto start = std::chrono::steady_clock::now();
    const auto ctx = make_mask_context(g);
    GroupScanReport rep;
    rep.n = n;
    rep.group_spec = g.spec_string();
    rep.atom_count = int(ctx.atoms.size());
    const std::uint64_t total = std::uint64_t(1) << ctx.atoms.size();

    struct ChunkResult {
        MaskScanStats stats;
        std::vector<InstanceRecord> drg;
        std::vector<InstanceRecord> violations;
    };
    int jobs = opts.jobs > 0 ? opts.jobs : int(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    const int chunk_count = total < 1024 ? 1 : jobs * 4;
    std::vector<ChunkResult> results(chunk_count);

    auto run_chunk = [&](int c) {
        const std::uint64_t lo = total * c / chunk_count;
        const std::uint64_t hi = total * (c + 1) / chunk_count;
        auto& res = results[c];
        scan_mask_range(ctx, lo, hi, res.stats,
                        [&](std::uint64_t, std::uint64_t elems, std::uint64_t witness_elems) {
                            ConnectionSet s(g, mask_to_elements(elems));
                            InstanceRecord rec = classify_with(
                                g, s, mask_to_elements(witness_elems), opts.group_by_iso);
                            if (rec.has_violation()) res.violations.push_back(rec);
                            if (rec.verdict.is_drg) res.drg.push_back(std::move(rec));
                        });
    };

    if (jobs == 1 || chunk_count == 1) {
        for (int c = 0; c < chunk_count; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (int c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1)) run_chunk(c);
            });
        for (auto& t : pool) t.join();
    }

    for (auto& res : results) {
        rep.scanned += res.stats.scanned;
        rep.generating += res.stats.generating;
        rep.minimal += res.stats.minimal;
        for (auto& r : res.drg) rep.drg.push_back(std::move(r));
        for (auto& r : res.violations) rep.violations.push_back(std::move(r));
    }
    rep.elapsed_ms =
        opts.deterministic
            ? 0
            : std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start)
                  .count();
    return rep;
}

// Exhaustive check of the classification over all generalized dicyclic groups
// of order 4n, n_min <= n <= n_max: every distance-regular instance must be
// K4,4 and every structural cross-check must pass.
inline VerificationReport verify_theorem(int n_min, int n_max, const VerifyOptions& opts = {}) {
    if (n_min < 2) throw std::invalid_argument("n > 1 required (got n_min = " + std::to_string(n_min) + ")");
    if (n_min > n_max)
        throw std::invalid_argument("empty range: n_min " + std::to_string(n_min) + " > n_max " +
                                    std::to_string(n_max));
    if (opts.n_cap > kMaxVerifyN)
        throw std::invalid_argument("cap " + std::to_string(opts.n_cap) + " exceeds the hard limit " +
                                    std::to_string(kMaxVerifyN));
    if (n_max > opts.n_cap)
        throw std::invalid_argument(
            "n_max " + std::to_string(n_max) + " exceeds cap " + std::to_string(opts.n_cap) +
            ": up to 2^" + std::to_string(2 * n_max) + " = " +
            std::to_string(std::uint64_t(1) << (2 * n_max)) +
            " atom subsets per group; raise the cap (at most " + std::to_string(kMaxVerifyN) +
            ") to proceed");

    VerificationReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    for (int n = n_min; n <= n_max; ++n) {
        for (const AbelianGroup& a : abelian_groups_with_unique_involution(2 * n)) {
            GroupTable g = GroupTable::generalized_dicyclic(a);
            report.groups.push_back(scan_group(g, n, opts));
        }
    }
    for (const auto& grp : report.groups) {
        if (!grp.violations.empty()) report.theorem_holds = false;
        for (const auto& rec : grp.drg)
            if (rec.iso_k44 != IsoK44::yes) report.theorem_holds = false;
    }
    return report;
}

// Exit-code contract: 0 = theorem holds, 2 = mathematical violation.
inline int verdict_exit_code(const VerificationReport& report) {
    return report.theorem_holds ? 0 : 2;
}

} // namespace dicyclic
