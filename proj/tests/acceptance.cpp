// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chiforge/harness.hpp"
#include "chiforge/increment.hpp"
#include "oracle_reference.hpp"

using namespace chiforge;

namespace {

int workers() { return static_cast<int>(std::max(2u, std::thread::hardware_concurrency())); }

Graph random_graph(Rng& rng, int lo, int hi) {
    int n = rng.between(lo, hi);
    return gnp(n, Rational(rng.between(1, 9), 10), rng);
}

Graph random_p5free_instance(Rng& rng, int lo, int hi) {
    GenSpec s;
    s.n = rng.between(lo, hi);
    s.p = Rational(rng.between(2, 8), 10);
    s.seed = rng.next();
    return random_p5free(s);
}

int ref_chi(const Graph& g, const VertexSet& s) { return ref::chi_subset_dp(induced(g, s)); }

struct Result {
    bool pass = true;
    std::string note;
};

using Check = std::function<Result()>;

// 1. detector vs naive scan
Result p5_detector() {
    Rng rng(101);
    int disagree = 0;
    std::string first;
    for (int t = 0; t < 2000; ++t) {
        Graph g = random_graph(rng, 1, 10);
        if (find_induced_p5(g) != ref::naive_p5(g)) {
            if (!disagree++) first = to_graph6(g);
        }
    }
    return {disagree == 0, "2000 graphs n<=10, " + std::to_string(disagree) + " discrepancies" +
                               (first.empty() ? "" : " (first " + first + ")")};
}

// 2. oracle exactness
Result oracle_exactness() {
    Rng rng(202);
    int bad = 0;
    std::string first;
    for (int t = 0; t < 500; ++t) {
        Graph g = random_graph(rng, 1, 9);
        Oracle o(g);
        int chi = o.chi(), om = o.omega(g.vertices()), al = o.alpha(g.vertices());
        bool ok = chi == ref::chi_backtrack(g) && om == ref::max_clique_brute(g) &&
                  al == ref::max_clique_brute(g, true) && om <= chi && al * chi >= g.n() &&
                  verify_coloring(g, g.vertices(), o.chi_witness(g.vertices()));
        if (!ok && !bad++) first = to_graph6(g);
    }
    return {bad == 0, "500 graphs n<=9, " + std::to_string(bad) + " mismatches" +
                          (first.empty() ? "" : " (first " + first + ")")};
}

// 3. neighbourhood of chromatic number at least a third
Result gyarfas() {
    Rng rng(303);
    int done = 0, bad = 0;
    std::string first;
    while (done < 1000) {
        Graph g = random_p5free_instance(rng, 2, 14);
        if (g.edge_count() == 0) continue;
        ++done;
        Json inv = make_invocation("gyarfas_vertex", g, Mode::strict, g.vertices(), {}, {});
        bool ok = false;
        try {
            Certificate c = run_invocation(inv);
            int v = c.set("v").first();
            ok = verify_certificate(g, c).accepted() &&
                 Rational(ref_chi(g, g.nbrs(v)), ref_chi(g, g.vertices())) >= Rational(1, 3);
        } catch (const std::exception&) {
        }
        if (!ok && !bad++) first = to_graph6(g);
    }
    Graph c5 = cycle_graph(5);
    Oracle o(c5);
    GyarfasWitness w = gyarfas_vertex(o, c5.vertices());
    Rational ratio(w.chiN, w.chiG);
    bool tight = ratio == Rational(1, 3) && ref_chi(c5, c5.nbrs(w.v)) == 1 && ref_chi(c5, c5.vertices()) == 3;
    return {bad == 0 && tight, "1000 P5-free graphs n<=14, " + std::to_string(bad) + " failures; C5 ratio " +
                                   to_string(ratio)};
}

// 4. no vertex mixed on both sides of a connected anticomplete pair
Result mixed() {
    MixedReport lib = mixed_campaign(404, 500);
    // independent recount on separately drawn pairs
    Rng rng(405);
    int pairs = 0, found = 0;
    while (pairs < 500) {
        Graph g = random_p5free_instance(rng, 6, 14);
        std::vector<int> comp(g.n(), -1);
        VertexSet removed;
        for (int v = 0; v < g.n(); ++v)
            if (rng.below(3) == 0) removed.insert(v);
        int nc = 0;
        for (int s = 0; s < g.n(); ++s) {
            if (removed.contains(s) || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w = 0; w < g.n(); ++w)
                    if (g.adjacent(u, w) && !removed.contains(w) && comp[w] < 0) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            }
            ++nc;
        }
        if (nc < 2) continue;
        int ca = static_cast<int>(rng.below(nc)), cb = (ca + 1) % nc;
        ++pairs;
        for (int v = 0; v < g.n(); ++v) {
            if (comp[v] == ca || comp[v] == cb) continue;
            bool side[2][2] = {{false, false}, {false, false}};  // [pair side][adjacent]
            for (int u = 0; u < g.n(); ++u) {
                if (comp[u] == ca) side[0][g.adjacent(u, v)] = true;
                if (comp[u] == cb) side[1][g.adjacent(u, v)] = true;
            }
            if (side[0][0] && side[0][1] && side[1][0] && side[1][1]) ++found;
        }
    }
    return {lib.pairs == 500 && lib.mixed == 0 && found == 0,
            std::to_string(lib.pairs) + " + " + std::to_string(pairs) + " pairs, " +
                std::to_string(lib.mixed + found) + " mixed vertices"};
}

// 5. χ as a measure
Result measure() {
    AxiomReport r = verify_measure_axioms(505, 200, 500);
    // reference values on the two constructions
    Rng rng(506);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        Graph a = random_graph(rng, 1, 6), b = random_graph(rng, 1, 6);
        int ca = ref::chi_subset_dp(a), cb = ref::chi_subset_dp(b);
        if (ref::chi_subset_dp(disjoint_union(a, b)) != std::max(ca, cb)) ++bad;
        if (ref::chi_subset_dp(join(a, b)) != ca + cb) ++bad;
    }
    return {r.ok() && bad == 0, std::to_string(r.checks) + " library checks, " + std::to_string(r.failures.size()) +
                                    " failures; 400 reference checks, " + std::to_string(bad) + " failures"};
}

// Campaign reports shared by criteria 6 and 10.
std::map<std::string, CampaignReport>& campaigns() {
    static std::map<std::string, CampaignReport> m = [] {
        std::map<std::string, CampaignReport> out;
        for (const auto& l : lemma_ids()) {
            CampaignSpec s;
            s.lemma = l;
            s.trials = 200;
            s.seed = 606;
            s.workers = workers();
            out[l] = run_campaign(s);
        }
        return out;
    }();
    return m;
}

// 6. every certificate accepted, no structural waivers, planted faults rejected
Result soundness() {
    std::ostringstream bad;
    int accepted = 0, total = 0, waivers = 0;
    std::map<std::string, Certificate> by_kind;  // first certificate of each lemma/kind
    for (const auto& [l, r] : campaigns()) {
        total += r.instances;
        accepted += r.pass;
        waivers += r.structural_waivers;
        if (r.pass != 200 || r.instances != 200 || r.structural_waivers) bad << ' ' << l << '=' << r.pass;
        for (const auto& row : r.rows) {
            if (!row.verified) continue;
            Certificate c = run_invocation(row.invocation);
            by_kind.emplace(l + "/" + c.kind, c);
        }
    }
    int planted = 0, rejected = 0;
    for (const auto& [k, c] : by_kind) {
        Graph g = from_graph6(c.graph6);
        auto ms = plant_faults(c, g.n(), 10);
        if (ms.size() != 10) bad << " short-mutations:" << k;
        for (const auto& m : ms) {
            ++planted;
            if (!verify_certificate(g, m.cert).accepted()) ++rejected;
            else bad << " survived:" << k << '/' << m.name;
        }
    }
    std::string b = bad.str();
    return {b.empty() && accepted == total && waivers == 0 && rejected == planted,
            std::to_string(lemma_ids().size()) + " lemmas, " + std::to_string(accepted) + "/" + std::to_string(total) +
                " accepted, " + std::to_string(waivers) + " structural waivers; " + std::to_string(rejected) + "/" +
                std::to_string(planted) + " planted faults over " + std::to_string(by_kind.size()) +
                " certificate kinds rejected" + b};
}

// 7. constant chain
Result ledger_digits() {
    ConstantLedger l = ledger();
    Int a1 = 200, b = 6 * a1 * a1 * a1, a2 = 16 * b * b + 24 * b, d = 32 * a2 + 96;
    bool ok = l.a1 == a1 && l.b_mid == b && l.a2 == a2 && l.d == d && d >= 160 && b.str() == "48000000" &&
              a2.str() == "36864001152000000" && d.str() == "1179648036864000096";
    return {ok, "a1=" + l.a1.str() + " b=" + l.b_mid.str() + " a'=" + l.a2.str() + " d=" + l.d.str()};
}

// 8. φ_{r,s}(c) in [1 - 2c^(2^(r+2)), 1]
Result phi_bounds() {
    Rng rng(808);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
        int s = rng.between(0, 12), r = rng.between(0, s);
        long num = rng.between(1, 50);
        Rational c(num, 512 * num + static_cast<long>(rng.below(5000)));
        Rational phi = phi_eval(c, r, s);
        Rational direct = 1;
        for (int i = r + 1; i <= s; ++i) {
            Rational p = c;
            for (int k = 0; k <= i; ++k) p *= p;  // c^(2^(i+1))
            direct *= 1 - p;
        }
        Rational lo = c;
        for (int k = 0; k < r + 2; ++k) lo *= lo;  // c^(2^(r+2))
        lo = 1 - 2 * lo;
        if (phi != direct || phi < lo || phi > 1) ++bad;
    }
    return {bad == 0, "100 draws with c<=2^-9, r<=s<=12, " + std::to_string(bad) + " violations"};
}

// 9. small blockade exhibits
Result blockades() {
    std::ostringstream note;
    bool ok = true;
    {
        Graph k12 = complete_graph(12);
        Certificate c = run_invocation(make_invocation("anticonn_or_complete", k12, Mode::relaxed, k12.vertices(), {},
                                                       {{"y", Rational(1, 8)}}));
        auto bs = blocks_of(c, "B_");
        Oracle o(k12);
        bool six = c.kind == "complete_blockade" && bs.size() == 6 &&
                   std::all_of(bs.begin(), bs.end(), [&](const VertexSet& b) { return o.chi(b) == 2; }) &&
                   verify_certificate(k12, c).accepted();
        ok = ok && six;
        note << "K12: k=" << bs.size() << (six ? " ok" : " FAIL");
    }
    std::vector<Graph> inst = {complete_graph(8), complete_multipartite(std::vector<int>(8, 2)),
                               disjoint_union(complete_graph(8), complete_graph(3))};
    Rng rng(909);
    while (inst.size() < 20) {
        std::vector<int> parts;
        for (int k = rng.between(8, 11); k > 0; --k) parts.push_back(rng.between(1, 2));
        Graph g = complete_multipartite(parts);
        if (rng.below(2)) g = disjoint_union(g, random_p5free_instance(rng, 2, 6));
        inst.push_back(g);
    }
    int good = 0, direct = 0;
    for (const Graph& g : inst) {
        if (Oracle(g).chi() < 8) continue;
        try {
            Certificate c = run_invocation(make_invocation("convert_blockade", g, Mode::relaxed, g.vertices(), {},
                                                           {{"eps", Rational(1, 2)}, {"a", Rational(1)}}));
            if ((c.bullet == 1 || c.bullet == 2) && blocks_of(c, "A_").size() >= 2 &&
                verify_certificate(g, c).accepted()) {
                ++good;
                for (const auto& e : c.trace)
                    if (e.value("step", "") == "inner fails") {
                        ++direct;
                        break;
                    }
            }
        } catch (const std::exception& e) {
            note << " [" << to_graph6(g) << ": " << e.what() << "]";
        }
    }
    ok = ok && good == static_cast<int>(inst.size());
    note << "; convert eps=1/2 a=1: " << good << "/" << inst.size() << " instances with chi>=8 verified (" << direct
         << " where the inner blockade does not exist at a=1)";
    return {ok, note.str()};
}

// 10. byte-identical reruns and certificate replay
Result determinism() {
    int differ = 0, replayed = 0, failed = 0;
    std::vector<std::future<std::pair<int, int>>> jobs;
    for (const auto& [l, r] : campaigns()) {
        CampaignSpec s;
        s.lemma = l;
        s.trials = 200;
        s.seed = 606;
        s.workers = 1;  // different worker count from the first run
        if (report_csv(run_campaign(s)) != report_csv(r)) ++differ;
        jobs.push_back(std::async(std::launch::async, [&r = r] {
            int ok = 0, bad = 0;
            for (const auto& row : r.rows) {
                if (!row.verified) continue;
                (replays(run_invocation(row.invocation)) ? ok : bad)++;
            }
            return std::make_pair(ok, bad);
        }));
    }
    for (auto& j : jobs) {
        auto [ok, bad] = j.get();
        replayed += ok;
        failed += bad;
    }
    return {differ == 0 && failed == 0, std::to_string(campaigns().size()) + " campaigns rerun, " +
                                            std::to_string(differ) + " differ; " + std::to_string(replayed) +
                                            " certificates replayed, " + std::to_string(failed) + " differ"};
}

// 11. exploratory scan
Result scan() {
    ScanReport r = extremal_scan(1111, 1000, workers());
    bool c5 = std::any_of(r.rows.begin(), r.rows.end(), [](const ScanRow& row) {
        return row.graph6 == to_graph6(cycle_graph(5)) && row.chi == 3 && row.omega == 2 &&
               std::abs(row.exponent - std::log(3.0) / std::log(2.0)) < 1e-12;
    });
    std::ostringstream note;
    note << r.rows.size() << " rows, max log chi/log omega = " << r.max_exponent << " on " << r.max_graph6
         << "; C5 row " << (c5 ? "present" : "missing");
    return {r.rows.size() >= 1000 && c5, note.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Check>> checks = {
        {"p5-detector", p5_detector}, {"oracle-exactness", oracle_exactness},
        {"gyarfas-third", gyarfas},   {"no-mixed-vertex", mixed},
        {"chi-measure", measure},     {"certificate-soundness", soundness},
        {"ledger-digits", ledger_digits}, {"phi-bounds", phi_bounds},
        {"blockade-exhibits", blockades}, {"determinism", determinism},
        {"extremal-scan", scan},
    };
    int failed = 0, i = 0;
    for (const auto& [name, f] : checks) {
        ++i;
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = f();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!r.pass) ++failed;
        std::cout << (r.pass ? "PASS " : "FAIL ") << i << ' ' << name << ": " << r.note << " [" << std::fixed
                  << std::setprecision(1) << secs << "s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
