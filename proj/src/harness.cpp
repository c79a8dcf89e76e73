#include "chiforge/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "chiforge/increment.hpp"
#include "chiforge/structure.hpp"

namespace chiforge {

namespace {

VertexSet parse_set(const Json& j) { return VertexSet::from_vector(j.get<std::vector<int>>()); }

std::vector<VertexSet> prefixed(const Json& sets, const std::string& prefix) {
    std::vector<VertexSet> out;
    for (int i = 1;; ++i) {
        auto it = sets.find(prefix + std::to_string(i));
        if (it == sets.end()) break;
        out.push_back(parse_set(*it));
    }
    return out;
}

struct Args {
    const Json& inv;
    VertexSet set(const std::string& n) const { return parse_set(inv.at("sets").at(n)); }
    int vertex(const std::string& n) const { return set(n).first(); }
    Rational par(const std::string& n) const { return parse_rational(inv.at("params").at(n).get<std::string>()); }
    long integer(const std::string& n) const {
        Rational r = par(n);
        if (boost::multiprecision::denominator(r) != 1) throw RangeError(n + " must be an integer");
        return boost::multiprecision::numerator(r).convert_to<long>();
    }
    std::vector<VertexSet> blocks(const std::string& p) const { return prefixed(inv.at("sets"), p); }
    std::vector<Rational> rs(std::size_t l) const {
        std::vector<Rational> out;
        for (std::size_t j = 1; j <= l; ++j) out.push_back(par("r_" + std::to_string(j)));
        return out;
    }
};

using Runner = std::function<Certificate(Ctx&, const Args&)>;

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> table = {
        {"gyarfas_vertex", [](Ctx& c, const Args& a) { return gyarfas_certificate(c, a.set("G")); }},
        {"bip_trichotomy",
         [](Ctx& c, const Args& a) {
             return bip_trichotomy(c, a.set("G"), a.vertex("v"), a.set("A"), a.set("B"), a.par("eps"));
         }},
        {"pure_or_dense",
         [](Ctx& c, const Args& a) { return pure_or_dense(c, a.set("G"), a.par("eps"), a.par("delta")); }},
        {"rodl_chi", [](Ctx& c, const Args& a) { return rodl_chi(c, a.set("G"), a.par("eps")); }},
        {"decompose_anti",
         [](Ctx& c, const Args& a) { return decompose_anti(c, a.set("G"), a.par("eps"), a.par("p"), a.par("q")); }},
        {"grow_anticomplete",
         [](Ctx& c, const Args& a) {
             return grow_anticomplete(c, a.set("G"), a.par("c"), static_cast<int>(a.integer("s")));
         }},
        {"anti_or_dense", [](Ctx& c, const Args& a) { return anti_or_dense(c, a.set("G"), a.par("a"), a.par("c")); }},
        {"avg_p5",
         [](Ctx& c, const Args& a) {
             return avg_p5(c, a.set("G"), a.vertex("v"), a.set("A"), a.set("B"), a.par("r"), a.par("y"),
                           a.integer("q"));
         }},
        {"dense_shrink",
         [](Ctx& c, const Args& a) {
             return dense_shrink(c, a.set("G"), a.vertex("v"), a.set("A"), a.set("B"), a.par("x"), a.par("y"));
         }},
        {"dense_combine",
         [](Ctx& c, const Args& a) {
             return dense_combine(c, a.set("G"), a.vertex("v"), a.set("A"), a.set("B"), a.par("r"), a.par("x"),
                                  a.par("y"));
         }},
        {"incre1_step", [](Ctx& c, const Args& a) { return incre1_step(c, a.set("G"), a.par("x"), a.par("y")); }},
        {"round1", [](Ctx& c, const Args& a) { return round1(c, a.set("G"), a.par("x"), a.par("a")); }},
        {"convert_blockade",
         [](Ctx& c, const Args& a) { return convert_blockade(c, a.set("G"), a.par("eps"), a.par("a")); }},
        {"midway_blockade",
         [](Ctx& c, const Args& a) { return midway_blockade(c, a.set("G"), a.par("eps"), a.par("b")); }},
        {"anticomplete_extract",
         [](Ctx& c, const Args& a) {
             return anticomplete_extract(c, a.set("G"), a.set("A"), a.blocks("B_"), a.par("r"));
         }},
        {"averaged_extract",
         [](Ctx& c, const Args& a) {
             auto as = a.blocks("A_");
             return averaged_extract(c, a.set("G"), as, a.blocks("B_"), a.rs(as.size()));
         }},
        {"anticonn_or_complete", [](Ctx& c, const Args& a) { return anticonn_or_complete(c, a.set("G"), a.par("y")); }},
        {"incre2_step",
         [](Ctx& c, const Args& a) { return incre2_step(c, a.set("G"), a.blocks("A_"), a.par("y"), a.par("b")); }},
        {"round2", [](Ctx& c, const Args& a) { return round2(c, a.set("G"), a.par("eps"), a.par("a")); }},
        {"main_trichotomy", [](Ctx& c, const Args& a) { return main_trichotomy(c, a.set("G"), a.par("d")); }},
    };
    return table;
}

}  // namespace

Json make_invocation(const std::string& lemma, const Graph& g, Mode mode, const VertexSet& ground,
                     const std::vector<std::pair<std::string, VertexSet>>& sets,
                     const std::vector<std::pair<std::string, Rational>>& params) {
    Json inv{{"lemma", lemma}, {"mode", to_string(mode)}, {"graph6", to_graph6(g)}};
    Json s = Json::object();
    s["G"] = ground.to_vector();
    for (const auto& [n, v] : sets) s[n] = v.to_vector();
    Json p = Json::object();
    for (const auto& [n, r] : params) p[n] = to_string(r);
    inv["sets"] = s;
    inv["params"] = p;
    return inv;
}

Certificate run_invocation(const Json& inv, int budget) {
    const std::string lemma = inv.at("lemma").get<std::string>();
    auto it = runners().find(lemma);
    if (it == runners().end()) throw RangeError("unknown lemma " + lemma);
    Oracle o(from_graph6(inv.at("graph6").get<std::string>()), budget);
    Ctx ctx(o, parse_mode(inv.value("mode", std::string("relaxed"))));
    Certificate c = it->second(ctx, Args{inv});
    c.invocation = inv;
    return c;
}

bool admissible(const Json& inv, std::string* why) {
    try {
        Oracle o(from_graph6(inv.at("graph6").get<std::string>()));
        Ctx ctx(o, Mode::relaxed);
        const std::string lemma = inv.at("lemma").get<std::string>();
        Args a{inv};
        Certificate hyp = draft(ctx, lemma, 0, a.set("G"));
        for (const auto& [n, s] : inv.at("sets").items())
            if (n != "G") hyp.put_set(n, parse_set(s));
        for (const auto& [n, r] : inv.at("params").items()) hyp.put_param(n, parse_rational(r.get<std::string>()));
        if (lemma == "rodl_chi") {
            Rational eps = a.par("eps");
            hyp.put_param("delta", eps > 0 && eps < 1 ? rodl_delta(eps) : Rational(0));
        }
        check_entry(ctx, hyp);
        return true;
    } catch (const std::exception& e) {
        if (why) *why = e.what();
        return false;
    }
}

bool replays(const Certificate& c, int budget) {
    if (c.invocation.empty()) return false;
    return to_json(run_invocation(c.invocation, budget)).dump() == to_json(c).dump();
}

// --- samplers -----------------------------------------------------------------

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Random P5-free graph from a rotating mix of sources.
Graph any_graph(Rng& rng, int lo, int hi) {
    int n = rng.between(lo, hi);
    switch (rng.below(4)) {
    case 0: {
        GenSpec s;
        s.n = n;
        s.p = Rational(rng.between(2, 7), 10);
        s.seed = rng.next();
        return random_p5free(s);
    }
    case 1:
        return random_cograph(n, rng);
    case 2: {
        std::vector<int> parts;
        for (int left = n; left > 0;) {
            int p = std::min(left, rng.between(1, 3));
            parts.push_back(p);
            left -= p;
        }
        return complete_multipartite(parts);
    }
    default: {
        GenSpec s;
        s.strategy = Strategy::family;
        s.family = "blowup";
        s.params = {rng.between(1, 2)};
        s.seed = rng.next();
        Graph g = random_p5free(s);
        return g.n() <= hi + 6 ? g : random_cograph(n, rng);
    }
    }
}

// Joins of small pieces: high χ with small nonneighbourhoods.
Graph dense_graph(Rng& rng, int pieces) {
    Graph g = complete_graph(1);
    for (int i = 1; i < pieces; ++i) {
        Graph h = rng.below(3) == 0 ? random_cograph(rng.between(1, 3), rng) : edgeless_graph(rng.between(1, 2));
        g = join(g, h);
    }
    return g;
}

VertexSet random_subset(Rng& rng, const VertexSet& s, const Rational& p) {
    VertexSet out;
    for (int v : s)
        if (rng.bernoulli(p)) out.insert(v);
    return out;
}

using Sets = std::vector<std::pair<std::string, VertexSet>>;
using Params = std::vector<std::pair<std::string, Rational>>;
using Sampler = std::function<std::optional<Json>(Rng&, Mode)>;

Json inv(const std::string& lemma, const Graph& g, Mode m, Sets s = {}, Params p = {}) {
    return make_invocation(lemma, g, m, g.vertices(), s, p);
}

// v with both a neighbourhood and a nonneighbourhood
std::optional<int> split_vertex(Rng& rng, const Graph& g) {
    std::vector<int> ok;
    for (int v = 0; v < g.n(); ++v)
        if (!g.nbrs(v).empty() && !(g.vertices() - g.closed_nbrs(v)).empty()) ok.push_back(v);
    if (ok.empty()) return std::nullopt;
    return ok[rng.below(ok.size())];
}

int max_nonnbr_chi(Oracle& o, const VertexSet& a, const VertexSet& b) {
    int r = 0;
    for (int u : b) r = std::max(r, o.chi(a - o.graph().nbrs(u)));
    return r;
}

// Anticomplete anticonnected blocks from components of G - A, and A filtered
// so no vertex is mixed on two blocks.
std::optional<std::pair<VertexSet, std::vector<VertexSet>>> extraction_instance(Rng& rng, const Graph& g) {
    VertexSet a = random_subset(rng, g.vertices(), R(1, 3));
    auto comps = components(g, g.vertices() - a, ComponentMode::connected);
    std::vector<VertexSet> bs;
    for (const auto& c : comps) {
        if (bs.size() == 3) break;
        auto anti = components(g, c, ComponentMode::anticonnected);
        VertexSet best = anti.front();
        for (const auto& s : anti)
            if (s.size() > best.size()) best = s;
        bs.push_back(best);
    }
    VertexSet kept;
    for (int u : a) {
        int mixed = 0;
        for (const auto& b : bs) mixed += mixed_on(g, u, b) == Mixed::mixed;
        if (mixed < 2) kept.insert(u);
    }
    if (kept.empty() || bs.empty()) return std::nullopt;
    return std::pair{kept, bs};
}

const std::map<std::string, Sampler>& samplers() {
    static const std::map<std::string, Sampler> table = {
        {"gyarfas_vertex",
         [](Rng& rng, Mode m) -> std::optional<Json> { return inv("gyarfas_vertex", any_graph(rng, 5, 14), m); }},
        {"bip_trichotomy",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 6, 13);
             auto v = split_vertex(rng, g);
             if (!v) return std::nullopt;
             Oracle o(g);
             VertexSet a = g.nbrs(*v), b;
             Rational eps = R(1, 4);
             for (int u : g.vertices() - g.closed_nbrs(*v))
                 if (o.chi(a - g.nbrs(u)) < eps * o.chi(a)) b.insert(u);
             if (b.empty()) return std::nullopt;
             return inv("bip_trichotomy", g, m, {{"v", VertexSet::single(*v)}, {"A", a}, {"B", b}}, {{"eps", eps}});
         }},
        {"pure_or_dense",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             return inv("pure_or_dense", any_graph(rng, 5, 12), m, {}, {{"eps", R(1, 2)}, {"delta", R(1, 512)}});
         }},
        {"rodl_chi",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             return inv("rodl_chi", any_graph(rng, 5, 12), m, {}, {{"eps", R(1, 2)}});
         }},
        {"decompose_anti",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 5, 12);
             int cg = Oracle(g).chi();
             long q = (15 * cg) / 16;
             if (q < 1) return std::nullopt;
             long p = rng.between(1, static_cast<int>(q));
             Json j = inv("decompose_anti", g, m, {}, {{"eps", R(1, 4)}, {"p", R(p)}, {"q", R(q)}});
             // (p,q)-sparsity quantifies over all induced subgraphs; keep the
             // instance only if no subgraph the procedure visits refutes it.
             try {
                 run_invocation(j);
             } catch (const SparsityError&) {
                 return std::nullopt;
             } catch (const std::exception&) {
             }
             return j;
         }},
        {"grow_anticomplete",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             return inv("grow_anticomplete", any_graph(rng, 5, 12), m, {},
                        {{"c", pow2(-9)}, {"s", R(rng.between(0, 3))}});
         }},
        {"anti_or_dense",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             return inv("anti_or_dense", any_graph(rng, 5, 12), m, {}, {{"a", R(5)}, {"c", pow2(-9)}});
         }},
        {"avg_p5",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 6, 12);
             auto v = split_vertex(rng, g);
             if (!v) return std::nullopt;
             Oracle o(g);
             VertexSet a = g.nbrs(*v), b = g.vertices() - g.closed_nbrs(*v);
             int r = std::max(1, max_nonnbr_chi(o, a, b));
             return inv("avg_p5", g, m, {{"v", VertexSet::single(*v)}, {"A", a}, {"B", b}},
                        {{"r", R(r)}, {"y", R(1, 4)}, {"q", R(rng.between(1, 2))}});
         }},
        {"dense_shrink",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 6, 12);
             auto v = split_vertex(rng, g);
             if (!v) return std::nullopt;
             Oracle o(g);
             VertexSet b = g.vertices() - g.closed_nbrs(*v), a;
             Rational y = R(1, 2);
             for (int u : g.nbrs(*v))
                 if (o.chi(b - g.nbrs(u)) < y * o.chi(b)) a.insert(u);
             if (a.empty()) return std::nullopt;
             return inv("dense_shrink", g, m, {{"v", VertexSet::single(*v)}, {"A", a}, {"B", b}},
                        {{"x", R(1, 4)}, {"y", y}});
         }},
        {"dense_combine",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 6, 12);
             auto v = split_vertex(rng, g);
             if (!v) return std::nullopt;
             Oracle o(g);
             VertexSet a = g.nbrs(*v), b = g.vertices() - g.closed_nbrs(*v);
             int r = std::max(1, max_nonnbr_chi(o, a, b));
             return inv("dense_combine", g, m, {{"v", VertexSet::single(*v)}, {"A", a}, {"B", b}},
                        {{"r", R(r)}, {"x", R(1, 4)}, {"y", R(1, 4)}});
         }},
        {"incre1_step",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = rng.below(2) ? dense_graph(rng, rng.between(3, 8)) : any_graph(rng, 4, 10);
             return inv("incre1_step", g, m, {}, {{"x", R(1, 4)}, {"y", R(1, 2)}});
         }},
        {"round1",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             static const Rational xs[] = {R(1, 4), R(1, 3), R(1, 8)};
             return inv("round1", any_graph(rng, 5, 11), m, {}, {{"x", xs[rng.below(3)]}, {"a", R(4)}});
         }},
        {"convert_blockade",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             return inv("convert_blockade", any_graph(rng, 5, 11), m, {}, {{"eps", R(1, 2)}, {"a", R(4)}});
         }},
        {"midway_blockade",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             long a = rng.between(1, 4);  // b = 6a^3 as in the ledger
             return inv("midway_blockade", any_graph(rng, 5, 11), m, {}, {{"eps", R(1, 2)}, {"b", R(6 * a * a * a)}});
         }},
        {"anticomplete_extract",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 6, 13);
             auto e = extraction_instance(rng, g);
             if (!e) return std::nullopt;
             Oracle o(g);
             VertexSet all;
             for (const auto& b : e->second) all |= b;
             int r = std::max(1, max_nonnbr_chi(o, e->first, all));
             Sets s = {{"A", e->first}};
             for (std::size_t i = 0; i < e->second.size(); ++i) s.emplace_back("B_" + std::to_string(i + 1), e->second[i]);
             return inv("anticomplete_extract", g, m, s, {{"r", R(r)}});
         }},
        {"averaged_extract",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = any_graph(rng, 7, 13);
             auto e = extraction_instance(rng, g);
             if (!e || e->first.size() < 2) return std::nullopt;
             Oracle o(g);
             VertexSet a1, a2;
             for (int u : e->first) (rng.below(2) ? a1 : a2).insert(u);
             if (a1.empty() || a2.empty()) return std::nullopt;
             VertexSet all;
             for (const auto& b : e->second) all |= b;
             Sets s = {{"A_1", a1}, {"A_2", a2}};
             for (std::size_t i = 0; i < e->second.size(); ++i) s.emplace_back("B_" + std::to_string(i + 1), e->second[i]);
             return inv("averaged_extract", g, m, s,
                        {{"r_1", R(std::max(1, max_nonnbr_chi(o, a1, all)))},
                         {"r_2", R(std::max(1, max_nonnbr_chi(o, a2, all)))}});
         }},
        {"anticonn_or_complete",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             std::vector<int> parts;
             int k = rng.between(9, 16);
             for (int i = 0; i < k; ++i) parts.push_back(rng.between(1, 2));
             return inv("anticonn_or_complete", complete_multipartite(parts), m, {}, {{"y", R(1, 8)}});
         }},
        {"incre2_step",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             Graph g = rng.below(2) ? dense_graph(rng, rng.between(3, 9)) : any_graph(rng, 5, 11);
             Oracle o(g);
             int l = rng.between(1, 3);
             auto parts = equal_chi_partition(o, g.vertices(), l);
             if (!parts) return std::nullopt;
             Sets s;
             for (int j = 0; j < l; ++j) s.emplace_back("A_" + std::to_string(j + 1), (*parts)[j]);
             return inv("incre2_step", g, m, s, {{"y", R(1, 2)}, {"b", R(rng.between(2, 3))}});
         }},
        {"round2",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             std::vector<int> parts;
             int k = rng.between(5, 12);
             for (int i = 0; i < k; ++i) parts.push_back(rng.between(1, 2));
             Graph g = rng.below(2) ? complete_multipartite(parts) : dense_graph(rng, rng.between(6, 12));
             return inv("round2", g, m, {}, {{"eps", R(1, 4)}, {"a", R(rng.below(2) ? 40 : 112)}});
         }},
        {"main_trichotomy",
         [](Rng& rng, Mode m) -> std::optional<Json> {
             // with the gate chi(G) >= 2^d waived, an edgeless G admits no outcome
             Graph g = any_graph(rng, 4, 11);
             if (g.edge_count() == 0) return std::nullopt;
             return inv("main_trichotomy", g, m, {}, {{"d", R(160)}});
         }},
    };
    return table;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t t) {
    // splitmix64 step on the pair
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + t + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::optional<Json> sample_invocation(const std::string& lemma, std::uint64_t seed, Mode mode) {
    auto it = samplers().find(lemma);
    if (it == samplers().end()) throw RangeError("unknown lemma " + lemma);
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto j = it->second(rng, mode);
        if (j && admissible(*j)) return j;
    }
    return std::nullopt;
}

// --- campaigns ------------------------------------------------------------------

namespace {

TrialRow run_trial(const CampaignSpec& spec, int id) {
    TrialRow row;
    row.id = id;
    auto t0 = std::chrono::steady_clock::now();
    auto inv = sample_invocation(spec.lemma, mix(spec.seed, static_cast<std::uint64_t>(id)), spec.mode);
    if (!inv) {
        row.outcome = "no-instance";
        row.detail = "no admissible instance within 200 draws";
        return row;
    }
    row.invocation = *inv;
    row.graph6 = (*inv)["graph6"].get<std::string>();
    try {
        Certificate c = run_invocation(*inv, spec.budget);
        for (const auto& w : c.waivers)
            if (w.rfind("gate: ", 0) != 0) ++row.structural_waivers;
        Verdict v = verify_certificate(from_graph6(row.graph6), c, spec.budget);
        row.verified = v.accepted();
        row.outcome = row.verified ? c.kind + "#" + std::to_string(c.bullet) : "reject";
        if (!row.verified) row.detail = v.reason;
    } catch (const GateError& e) {
        row.outcome = "waived";
        row.detail = e.what();
    } catch (const RangeError& e) {
        row.outcome = "error:range";
        row.detail = e.what();
    } catch (const HypothesisError& e) {
        row.outcome = "error:hypothesis";
        row.detail = e.what();
    } catch (const NoOutcome& e) {
        row.outcome = "error:no-outcome";
        row.detail = e.what();
    } catch (const BudgetError& e) {
        row.outcome = "error:budget";
        row.detail = e.what();
    } catch (const GraphError& e) {
        row.outcome = "error:graph";
        row.detail = e.what();
    }
    if (spec.timing)
        row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

// Runs f(i) for i in [0, n) on `workers` threads; results land at index i.
template <class T, class F>
std::vector<T> parallel_map(int n, int workers, F f) {
    std::vector<T> out(n);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next.fetch_add(1)) < n;) out[i] = f(i);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(1, workers); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
    if (!samplers().count(spec.lemma)) throw RangeError("unknown lemma " + spec.lemma);
    if (spec.trials < 1) throw RangeError("trials must be >= 1");
    CampaignReport r;
    r.lemma = spec.lemma;
    r.mode = spec.mode;
    r.rows = parallel_map<TrialRow>(spec.trials, spec.workers, [&](int i) { return run_trial(spec, i); });
    for (const auto& row : r.rows) {
        ++r.instances;
        r.structural_waivers += row.structural_waivers;
        if (row.verified)
            ++r.pass;
        else if (row.outcome == "reject")
            ++r.fail;
        else if (row.outcome == "waived")
            ++r.waived;
        else
            ++r.error;
        if (!row.verified && row.outcome != "waived" && !row.graph6.empty()) r.counterexamples.push_back(row.graph6);
    }
    return r;
}

std::string report_csv(const CampaignReport& r) {
    std::ostringstream os;
    os << "instance_id,graph6,lemma,mode,outcome_tag,verified,millis\n";
    for (const auto& row : r.rows) {
        // graph6 never contains commas or quotes; outcome tags neither
        os << row.id << ',' << row.graph6 << ',' << r.lemma << ',' << to_string(r.mode) << ',' << row.outcome << ','
           << (row.verified ? "true" : "false") << ',' << row.millis << '\n';
    }
    return os.str();
}

Json report_summary(const CampaignReport& r) {
    return Json{{"lemma", r.lemma},
                {"mode", to_string(r.mode)},
                {"instances", r.instances},
                {"pass", r.pass},
                {"fail", r.fail},
                {"error", r.error},
                {"waived", r.waived},
                {"structural_waivers", r.structural_waivers},
                {"counterexamples", r.counterexamples}};
}

std::vector<std::string> save_counterexamples(const CampaignReport& r, const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& row : r.rows) {
        if (row.verified || row.outcome == "waived" || row.invocation.is_null()) continue;
        std::filesystem::create_directories(dir);
        std::string base = dir + "/" + r.lemma + "_" + std::to_string(row.id);
        std::ofstream(base + ".g6") << row.graph6 << '\n';
        Json side{{"invocation", row.invocation}, {"outcome", row.outcome}, {"detail", row.detail}};
        std::ofstream(base + ".json") << side.dump(2) << '\n';
        paths.push_back(base + ".json");
    }
    return paths;
}

// --- measure axioms -------------------------------------------------------------------

AxiomReport verify_measure_axioms(std::uint64_t seed, int constructed, int sampled) {
    AxiomReport rep;
    Rng rng(seed);
    auto check = [&](bool ok, const std::string& what, const Graph& g) {
        ++rep.checks;
        if (!ok) rep.failures.push_back(what + " on " + to_graph6(g));
    };
    for (int t = 0; t < constructed; ++t) {
        Graph a = any_graph(rng, 1, 6), b = any_graph(rng, 1, 6);
        int ca = Oracle(a).chi(), cb = Oracle(b).chi();
        Graph u = disjoint_union(a, b), j = join(a, b);
        check(Oracle(u).chi() == std::max(ca, cb), "chi(A + B) = max", u);
        check(Oracle(j).chi() == ca + cb, "chi(A join B) = sum", j);
    }
    for (int t = 0; t < sampled; ++t) {
        Graph g = any_graph(rng, 4, 12);
        Oracle o(g);
        VertexSet a = random_subset(rng, g.vertices(), R(1, 2)), b = random_subset(rng, g.vertices(), R(1, 2));
        int ca = o.chi(a), cb = o.chi(b), cu = o.chi(a | b);
        check(o.chi(VertexSet()) == 0, "chi(empty) = 0", g);
        check(o.chi(VertexSet::single(0)) == 1, "chi(single) = 1", g);
        check(o.chi(a & b) <= std::min(ca, cb), "monotone", g);
        check(std::max(ca, cb) <= cu, "max <= chi(union)", g);
        check(cu <= ca + cb, "subadditive", g);
        check(o.omega(a | b) <= cu, "omega <= chi", g);
    }
    return rep;
}

// --- extremal scan --------------------------------------------------------------------

ScanReport extremal_scan(std::uint64_t seed, int trials, int workers) {
    ScanReport rep;
    auto row_of = [](const Graph& g) {
        Oracle o(g);
        ScanRow r;
        r.graph6 = to_graph6(g);
        r.n = g.n();
        r.omega = o.omega(g.vertices());
        r.chi = o.chi();
        r.exponent = r.omega >= 2 ? std::log(double(r.chi)) / std::log(double(r.omega)) : 0;
        return r;
    };
    rep.rows = parallel_map<ScanRow>(trials, workers, [&](int i) {
        if (i == 0) return row_of(cycle_graph(5));
        Rng rng(mix(seed, static_cast<std::uint64_t>(i)));
        for (;;) {
            Graph g = any_graph(rng, 5, 14);
            if (Oracle(g).omega(g.vertices()) >= 2) return row_of(g);
        }
    });
    for (const auto& r : rep.rows)
        if (r.exponent > rep.max_exponent) {
            rep.max_exponent = r.exponent;
            rep.max_graph6 = r.graph6;
        }
    return rep;
}

std::string scan_csv(const ScanReport& r) {
    std::ostringstream os;
    os << "graph6,n,omega,chi,exponent\n";
    os.setf(std::ios::fixed);
    os.precision(6);
    for (const auto& row : r.rows)
        os << row.graph6 << ',' << row.n << ',' << row.omega << ',' << row.chi << ',' << row.exponent << '\n';
    return os.str();
}

// --- mixed invariant ----------------------------------------------------------------------

MixedReport mixed_campaign(std::uint64_t seed, int pairs) {
    MixedReport rep;
    for (int t = 0; rep.pairs < pairs && t < pairs * 50; ++t) {
        Rng rng(mix(seed, static_cast<std::uint64_t>(t)));
        Graph g = any_graph(rng, 6, 14);
        // two components of G - X for a random X, each connected
        VertexSet x = random_subset(rng, g.vertices(), R(1, 3));
        auto comps = components(g, g.vertices() - x, ComponentMode::connected);
        if (comps.size() < 2) continue;
        const VertexSet& a = comps[rng.below(comps.size())];
        const VertexSet* b = &comps[0];
        for (const auto& c : comps)
            if (!(c == a)) {
                b = &c;
                break;
            }
        ++rep.pairs;
        if (auto v = mixed_on_both(g, a, *b)) {
            ++rep.mixed;
            rep.witnesses.push_back(to_graph6(g) + " v=" + std::to_string(*v));
        }
    }
    return rep;
}

}  // namespace chiforge
