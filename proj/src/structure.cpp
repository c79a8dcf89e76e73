// Pure pairs, dense subgraphs and anticomplete growth in P5-free graphs.
// Each procedure follows its proof: candidate outcomes are tried in proof
// order and sealed only when their statement verifies.
#include "chiforge/structure.hpp"

#include <functional>
#include <unordered_set>

#include "procedure.hpp"

namespace chiforge {

namespace mp = boost::multiprecision;

using namespace detail;

void Ctx::note(const std::string& step, Json detail) {
    Json e = Json::object();
    e["step"] = step;
    e["depth"] = depth;
    for (auto& [k, v] : detail.items()) e[k] = v;
    trace.push_back(std::move(e));
}

const std::string& Ctx::graph6() {
    if (g6_.empty()) g6_ = to_graph6(o.graph());
    return g6_;
}

Certificate draft(Ctx& ctx, const std::string& lemma, int bullet, const VertexSet& g) {
    Certificate c;
    c.lemma = lemma;
    c.bullet = bullet;
    c.graph6 = ctx.graph6();
    c.mode = ctx.mode;
    c.cls = lemma_class(lemma);
    c.put_set("G", g);
    return c;
}

std::optional<Certificate> try_outcome(Ctx& ctx, Certificate c, const std::string& why) {
    Statement st = build_statement(ctx.o, c);
    auto reject = [&](const std::string& reason) {
        ctx.note("reject", {{"lemma", c.lemma}, {"bullet", c.bullet}, {"candidate", why}, {"reason", reason}});
        return std::nullopt;
    };
    if (!st.range_errors.empty()) return reject("range: " + st.range_errors.front());
    for (const auto& r : st.relations)
        if (auto why_not = check_relation(ctx.o, c, r); !why_not.empty()) return reject(why_not);
    for (const auto& cl : st.claims)
        if (auto why_not = check_claim(ctx.o, c, cl); !why_not.empty()) return reject(why_not);
    std::vector<std::string> own;
    for (const auto& g : st.gates) {
        if (check_claim(ctx.o, c, g).empty()) continue;
        if (ctx.mode == Mode::strict) throw GateError(c.lemma + ": gate " + g.meaning + " unmet");
        own.push_back(g.meaning);
    }
    c.kind = st.kind;
    c.relations = st.relations;
    c.claims = st.claims;
    c.waivers.clear();
    for (const auto& m : own) c.waivers.push_back("gate: " + m);
    for (const auto& w : ctx.waivers) c.waivers.push_back(w);
    ctx.note("accept", {{"lemma", c.lemma}, {"bullet", c.bullet}, {"candidate", why}});
    c.trace = ctx.trace;
    c.cls = c.waivers.empty() ? lemma_class(c.lemma) : 'C';
    for (const auto& m : own) ctx.waivers.push_back("gate: " + c.lemma + ": " + m);
    return c;
}

void check_entry(Ctx& ctx, const Certificate& hyp) {
    Certificate c = hyp;
    c.bullet = 0;
    Statement st = build_statement(ctx.o, c);
    if (!st.range_errors.empty()) throw RangeError(c.lemma + ": " + st.range_errors.front());
    for (const auto& r : st.relations)
        if (auto why = check_relation(ctx.o, c, r); !why.empty()) throw HypothesisError(c.lemma + ": " + why);
    for (const auto& cl : st.claims)
        if (auto why = check_claim(ctx.o, c, cl); !why.empty()) throw HypothesisError(c.lemma + ": " + why);
    for (const auto& g : st.gates) {
        if (check_claim(ctx.o, c, g).empty()) continue;
        if (ctx.mode == Mode::strict) throw GateError(c.lemma + ": gate " + g.meaning + " unmet");
        ctx.note("waive", {{"lemma", c.lemma}, {"gate", g.meaning}});
    }
    Json params = Json::object();
    for (const auto& [n, r] : c.params) params[n] = to_string(r);
    ctx.note("enter", {{"lemma", c.lemma},
                       {"class", std::string(1, lemma_class(c.lemma))},
                       {"G", js(c.set("G"))},
                       {"params", params}});
}

void p5_contradiction(const Graph& g, const VertexSet& s, const std::string& step) {
    if (auto p = find_induced_p5(g, s)) {
        std::string path;
        for (int v : *p) path += (path.empty() ? "" : "-") + std::to_string(v);
        throw GraphError(step + ": induced P5 " + path);
    }
    throw NoOutcome(step + ": expected an induced P5 but none exists");
}

std::optional<int> mixed_on_both(const Graph& g, const VertexSet& a, const VertexSet& b) {
    VertexSet rest = g.vertices() - a - b;
    for (int v : rest)
        if (mixed_on(g, v, a) == Mixed::mixed && mixed_on(g, v, b) == Mixed::mixed) return v;
    return std::nullopt;
}

VertexSet neighbourhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (int v : s) out |= g.nbrs(v);
    return out;
}

VertexSet maximal_component(Oracle& o, const VertexSet& s) {
    VertexSet best;
    int best_chi = -1;
    for (const auto& c : components(o.graph(), s, ComponentMode::connected)) {
        int x = o.chi(c);
        if (x > best_chi) {
            best_chi = x;
            best = c;
        }
    }
    return best;
}

Cutset minimal_cutset(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b) {
    VertexSet s0 = (neighbourhood(g, a) & s) - a;
    VertexSet cb;
    for (const auto& c : components(g, s - a - s0, ComponentMode::connected))
        if (c.contains(b.first())) cb = c;
    VertexSet z = s0 & neighbourhood(g, cb);
    VertexSet ca;
    for (const auto& c : components(g, s - z, ComponentMode::connected))
        if (c.contains(a.first())) ca = c;
    return {ca, cb, z};
}

// --- Gyárfás vertex ---------------------------------------------------------

GyarfasWitness gyarfas_vertex(Oracle& o, const VertexSet& s) {
    const Graph& g = o.graph();
    int cg = o.chi(s);
    if (cg < 2) throw HypothesisError("gyarfas_vertex: chi(G) >= 2 required");
    for (int v : s) {
        int cn = o.chi(g.nbrs(v) & s);
        if (3 * cn >= cg) return {v, cn, cg};
    }
    p5_contradiction(g, s, "gyarfas_vertex");
}

Certificate gyarfas_certificate(Ctx& ctx, const VertexSet& s) {
    Certificate hyp = draft(ctx, "gyarfas_vertex", 0, s);
    check_entry(ctx, hyp);
    auto w = gyarfas_vertex(ctx.o, s);
    ctx.note("gyarfas path scan", {{"v", w.v}, {"chiN", w.chiN}, {"chiG", w.chiG}});
    Attempt at(ctx, hyp);
    at(1, Named{{"v", VertexSet::single(w.v)}, {"N", ctx.graph().nbrs(w.v) & s}}, "first vertex with 3 chi(N(v)) >= chi(G)");
    return at.result();
}

// --- bipartite trichotomy ------------------------------------------------------

Certificate bip_trichotomy(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b,
                           const Rational& eps) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "bip_trichotomy", 0, g);
    hyp.put_set("v", VertexSet::single(v));
    hyp.put_set("A", a);
    hyp.put_set("B", b);
    hyp.put_param("eps", eps);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int ca = o.chi(a), cb = o.chi(b);

    VertexSet c, d;
    for (int u : a)
        if (o.chi(a - gr.closed_nbrs(u)) <= 3 * eps * ca) c.insert(u);
    for (int z : b)
        if (o.chi(b - gr.closed_nbrs(z)) <= 2 * eps * cb) d.insert(z);
    ctx.note("bip split", {{"C", js(c)}, {"D", js(d)}});
    if (classify_pair(gr, a, b) != PairKind::mixed && at(1, Named{{"X", a}, {"Y", b}}, "A and B pure"))
        return at.result();

    // A \ C is complete to B \ D unless one of these pairs is large and pure.
    constexpr int kPairCap = 64;
    int tried = 0;
    for (int u : a - c) {
        for (int z : b - d) {
            if (gr.adjacent(u, z)) continue;
            if (++tried > kPairCap) break;
            VertexSet x = (a - gr.closed_nbrs(u)) & gr.nbrs(z);
            VertexSet y = (b - gr.closed_nbrs(z)) & gr.nbrs(u);
            VertexSet e = maximal_component(o, b - gr.closed_nbrs(z) - gr.nbrs(u));
            ctx.note("bip nonadjacent pair", {{"u", u}, {"z", z}, {"X", js(x)}, {"Y", js(y)}, {"E", js(e)}});
            for (int w : x)
                if (mixed_on(gr, w, e) == Mixed::mixed) p5_contradiction(gr, g, "bip: vertex of X mixed on E");
            VertexSet x1 = complete_part(gr, x, e);
            if (at(1, Named{{"X", x1}, {"Y", e}}, "X1 complete to E") ||
                at(1, Named{{"X", x - x1}, {"Y", e}}, "X2 anticomplete to E"))
                return at.result();
            if (!is_complete_to(gr, x, y)) p5_contradiction(gr, g, "bip: X not complete to Y");
            if (at(1, Named{{"X", x}, {"Y", y}}, "X complete to Y")) return at.result();
        }
        if (tried > kPairCap) break;
    }
    if (at(1, Named{{"X", a - c}, {"Y", b - d}}, "A\\C complete to B\\D") ||
        at(2, Named{{"C", c}}, "C dense") || at(3, Named{{"D", d}}, "D dense"))
        return at.result();
    at(1, Named{{"X", VertexSet::single(a.first())}, {"Y", VertexSet::single(b.first())}}, "single vertices");
    return at.result();
}

// --- pure pair or dense subgraph ---------------------------------------------

namespace {

// Maps an outcome of bip_trichotomy to pure_or_dense.
bool map_bip(Attempt& at, const Certificate& inner, const std::string& why) {
    if (inner.bullet == 1)
        return at(1, Named{{"X", inner.set("X")}, {"Y", inner.set("Y")}}, why + ": pure pair");
    const char* name = inner.bullet == 2 ? "C" : "D";
    return at(2, Named{{"F", inner.set(name)}}, why + ": dense " + name);
}

}  // namespace

Certificate pure_or_dense(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& delta) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "pure_or_dense", 0, g);
    hyp.put_param("eps", eps);
    hyp.put_param("delta", delta);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);

    if (self_dense(o, g, eps).dense && at(2, Named{{"F", g}}, "G dense")) return at.result();
    VertexSet z;
    for (int v : g)
        if (o.chi(g - gr.nbrs(v)) >= eps * cg / 2) z.insert(v);
    ctx.note("sparse vertices", {{"Z", js(z)}});
    if (at(2, Named{{"F", g - z}}, "G \\ Z dense")) return at.result();

    auto comps = components(gr, g, ComponentMode::connected);
    if (comps.size() > 1) {
        VertexSet m = maximal_component(o, g);
        if (at(1, Named{{"X", m}, {"Y", g - m}}, "maximal component against the rest")) return at.result();
    }
    auto anti = components(gr, g, ComponentMode::anticonnected);
    if (anti.size() > 1 && at(1, Named{{"X", anti.front()}, {"Y", g - anti.front()}}, "anticomponent against the rest"))
        return at.result();

    if (o.chi(z) >= 2) {
        int v = gyarfas_vertex(o, z).v;
        VertexSet nv = gr.nbrs(v) & g;
        VertexSet a, b;
        for (int u : nv)
            (o.chi(g - gr.nbrs(u) - gr.nbrs(v)) >= delta * cg ? a : b).insert(u);
        ctx.note("gyarfas split", {{"v", v}, {"A", js(a)}, {"B", js(b)}});

        // For u in A, each z in N(v) \ N[u] is pure to a maximal component C
        // of G \ (N(u) ∪ N(v)). The proof names the mixed vertex w; it is z.
        constexpr int kUCap = 16;
        int seen = 0;
        if (!a.empty()) ctx.note("naming", {{"claim", "mixed vertex of N(v) \\ N(u) on C"}, {"read_as", "z"}});
        for (int u : a) {
            if (++seen > kUCap) break;
            VertexSet cu = maximal_component(o, g - gr.nbrs(u) - gr.nbrs(v));
            for (int w : nv - gr.closed_nbrs(u))
                if (mixed_on(gr, w, cu) == Mixed::mixed) p5_contradiction(gr, g, "pure_or_dense: z mixed on C");
            VertexSet rest = a - gr.nbrs(u);
            VertexSet x = complete_part(gr, rest, cu);
            if (at(1, Named{{"X", x}, {"Y", cu}}, "X complete to C") ||
                at(1, Named{{"X", rest - x}, {"Y", cu}}, "Y anticomplete to C"))
                return at.result();
        }
        if (at(2, Named{{"F", a}}, "A dense")) return at.result();

        VertexSet outside = g - gr.closed_nbrs(v);
        VertexSet p, q;
        int cb = o.chi(b);
        for (int w : outside) (4 * o.chi(b - gr.nbrs(w)) < eps * cb ? p : q).insert(w);
        ctx.note("P/Q split", {{"P", js(p)}, {"Q", js(q)}});
        if (!b.empty() && !p.empty()) {
            try {
                Nested nest(ctx);
                if (map_bip(at, bip_trichotomy(ctx, g, v, b, p, eps / 4), "bip on (B,P)")) return at.result();
            } catch (const HypothesisError& e) {
                ctx.note("skip", {{"reason", e.what()}});
            } catch (const NoOutcome& e) {
                ctx.note("skip", {{"reason", e.what()}});
            }
        }
        if (o.chi(q) >= 2) {
            int zq = gyarfas_vertex(o, q).v;
            VertexSet t = b - gr.nbrs(zq);
            VertexSet e = gr.nbrs(zq) & q;
            ctx.note("second gyarfas vertex", {{"z", zq}, {"T", js(t)}, {"E", js(e)}});
            if (!t.empty() && !e.empty()) {
                try {
                    Nested nest(ctx);
                    if (map_bip(at, bip_trichotomy(ctx, g, zq, e, t, eps / 4), "bip on (E,T)")) return at.result();
                } catch (const HypothesisError& ex) {
                    ctx.note("skip", {{"reason", ex.what()}});
                } catch (const NoOutcome& ex) {
                    ctx.note("skip", {{"reason", ex.what()}});
                }
            }
        }
    }
    // chi(G) < 1/delta: a single vertex is dense enough
    if (at(2, Named{{"F", VertexSet::single(g.first())}}, "single vertex")) return at.result();
    if (auto e = first_edge(gr, g))
        at(1, Named{{"X", VertexSet::single(e->first)}, {"Y", VertexSet::single(e->second)}}, "single edge");
    return at.result();
}

// --- anticomplete pair or dense subgraph (doubling) ---------------------------

Certificate rodl_chi(Ctx& ctx, const VertexSet& g, const Rational& eps) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "rodl_chi", 0, g);
    hyp.put_param("eps", eps);
    hyp.put_param("delta", eps > 0 && eps < 1 ? rodl_delta(eps) : Rational(0));
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    Rational eta = eps * eps / 128;
    long levels = 0;
    while (pow2(levels) * eps < 1) ++levels;

    std::vector<VertexSet> blocks{g};
    bool complete_levels = true;
    for (long k = 0; k < levels && complete_levels; ++k) {
        std::vector<VertexSet> next;
        for (const auto& bi : blocks) {
            Certificate inner;
            try {
                Nested nest(ctx);
                inner = pure_or_dense(ctx, bi, eps, eta);
            } catch (const NoOutcome& e) {
                ctx.note("skip", {{"reason", e.what()}});
                complete_levels = false;
                break;
            }
            if (inner.bullet == 2) {
                if (at(2, Named{{"F", inner.set("F")}}, "dense subgraph of a block")) return at.result();
                complete_levels = false;
                break;
            }
            const auto &x = inner.set("X"), &y = inner.set("Y");
            if (is_anticomplete_to(gr, x, y)) {
                if (at(1, Named{{"X", x}, {"Y", y}}, "anticomplete pair in a block")) return at.result();
                complete_levels = false;
                break;
            }
            next.push_back(x);
            next.push_back(y);
        }
        if (!complete_levels) break;
        blocks = std::move(next);
        ctx.note("complete blockade", {{"level", k + 1}, {"blocks", static_cast<int>(blocks.size())}});
    }
    if (complete_levels) {
        int target = o.chi(blocks.front());
        for (const auto& bi : blocks) target = std::min(target, o.chi(bi));
        VertexSet f;
        for (auto bi : blocks) {
            for (int v : bi)
                if (o.chi(bi - VertexSet::single(v)) >= target) bi.erase(v);
            f |= bi;
        }
        if (at(2, Named{{"F", f}}, "union of equalised complete blockade")) return at.result();
    }
    if (at(2, Named{{"F", VertexSet::single(g.first())}}, "single vertex")) return at.result();
    if (auto ne = first_nonedge(gr, g))
        at(1, Named{{"X", VertexSet::single(ne->first)}, {"Y", VertexSet::single(ne->second)}}, "single non-edge");
    return at.result();
}

// --- sparse pairs and the cutset decomposition ---------------------------------

std::optional<SparsePair> sparse_pair(Oracle& o, const VertexSet& f, const Rational& p) {
    const Graph& g = o.graph();
    std::vector<VertexSet> sides;
    std::unordered_set<VertexSet, VertexSetHash> seen;
    auto visit = [&](const VertexSet& b) {
        for (const auto& a : components(g, f - b - neighbourhood(g, b), ComponentMode::connected))
            if (seen.insert(a).second) sides.push_back(a);
    };
    if (f.size() <= kSparseExhaustive) {
        // connected sets with least vertex r, each generated once
        std::function<void(const VertexSet&, const VertexSet&, VertexSet, const VertexSet&)> rec =
            [&](const VertexSet& cur, const VertexSet& ext, VertexSet excl, const VertexSet& allowed) {
                visit(cur);
                if ((f - cur - neighbourhood(g, cur)).empty()) return;
                for (int w : ext) {
                    VertexSet nxt = ((ext | (g.nbrs(w) & allowed)) - excl - cur);
                    nxt.erase(w);
                    VertexSet cur2 = cur;
                    cur2.insert(w);
                    rec(cur2, nxt, excl, allowed);
                    excl.insert(w);
                }
            };
        for (int r : f) {
            VertexSet allowed;
            for (int v : f)
                if (v > r) allowed.insert(v);
            rec(VertexSet::single(r), g.nbrs(r) & allowed, VertexSet{}, allowed);
        }
    } else {
        for (int v : f) {
            visit(VertexSet::single(v));
            for (int w : g.nbrs(v) & f)
                if (w > v) visit(VertexSet{v, w});
        }
    }
    std::optional<SparsePair> best;
    int best_sum = -1, best_size = -1;
    for (const auto& a : sides) {
        int ca = o.chi(a);
        if (ca < p) continue;
        for (const auto& b : components(g, f - a - neighbourhood(g, a), ComponentMode::connected)) {
            int cb = o.chi(b);
            if (cb < p) continue;
            int sum = ca + cb, size = a.size() + b.size();
            if (sum > best_sum || (sum == best_sum && size > best_size)) {
                best_sum = sum;
                best_size = size;
                best = ca >= cb ? SparsePair{a, b} : SparsePair{b, a};
            }
        }
    }
    return best;
}

Certificate decompose_anti(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& p,
                           const Rational& q) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "decompose_anti", 0, g);
    hyp.put_param("eps", eps);
    hyp.put_param("p", p);
    hyp.put_param("q", q);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);

    if (components(gr, g, ComponentMode::connected).size() > 1) {
        VertexSet m = maximal_component(o, g);
        if (at(1, Named{{"A", g - m}, {"B", m}}, "rest against the maximal component")) return at.result();
        Certificate inner;
        {
            Nested nest(ctx);
            inner = decompose_anti(ctx, m, eps, p, q);
        }
        at(inner.bullet,
           [&](Certificate& c) {
               for (const auto& [n, s] : inner.sets)
                   if (n != "G") c.put_set(n, s);
           },
           "outcome inside the maximal component");
        return at.result();
    }

    auto sp = sparse_pair(o, g, p);
    if (!sp) throw SparsityError("decompose_anti: G has no anticomplete pair with chi >= p", g);
    Cutset cut = minimal_cutset(gr, g, sp->a, sp->b);
    ctx.note("minimal cutset", {{"A", js(cut.a)}, {"B", js(cut.b)}, {"Z", js(cut.z)}});
    if (auto w = mixed_on_both(gr, cut.a, cut.b); w && cut.z.contains(*w))
        p5_contradiction(gr, g, "decompose_anti: cutset vertex mixed on both sides");
    VertexSet za = complete_part(gr, cut.z, cut.a);
    if (at(2, Named{{"X", za}, {"Y", cut.a}}, "cutset part complete to A") ||
        at(2, Named{{"X", cut.z - za}, {"Y", cut.b}}, "cutset part complete to B"))
        return at.result();

    // (A, D, B_1..B_k, E), refined while chi(A) >= q
    VertexSet a = cut.a, d = cut.z, e;
    std::vector<VertexSet> bs;
    auto split_rest = [&](const VertexSet& rest) {
        for (const auto& c : components(gr, rest, ComponentMode::connected)) {
            if (o.chi(c) >= p)
                bs.push_back(c);
            else
                e |= c;
        }
    };
    split_rest(g - a - d);
    while (o.chi(a) >= q) {
        auto inner = sparse_pair(o, a, p);
        if (!inner) throw SparsityError("decompose_anti: A has no anticomplete pair with chi >= p", a);
        Cutset c2 = minimal_cutset(gr, a, inner->a, inner->b);
        split_rest(a - c2.a - c2.z);
        d |= c2.z;
        a = c2.a;
        ctx.note("refine A", {{"A", js(a)}, {"blocks", static_cast<int>(bs.size())}});
    }
    VertexSet s, r;
    for (int x : d) {
        Mixed m = mixed_on(gr, x, a);
        if (m == Mixed::mixed)
            s.insert(x);
        else if (m == Mixed::pure_complete)
            r.insert(x);
    }
    ctx.note("decomposition", {{"A", js(a)}, {"D", js(d)}, {"S", js(s)}, {"R", js(r)}, {"E", js(e)},
                               {"blocks", static_cast<int>(bs.size())}});
    if (at(2, Named{{"X", r}, {"Y", a}}, "R complete to A")) return at.result();
    constexpr int kSCap = 16;
    int seen = 0;
    for (int v : s) {
        if (++seen > kSCap) break;
        for (const auto& bi : bs) {
            if (!g.intersects(bi) || !gr.nbrs(v).intersects(bi)) continue;
            VertexSet si = (s - gr.closed_nbrs(v)) & neighbourhood(gr, bi);
            if (at(2, Named{{"X", si}, {"Y", bi}}, "S_i complete to B_i")) return at.result();
        }
    }
    if (at(3, Named{{"F", s}}, "S dense")) return at.result();
    VertexSet rest = (d - r - s) | e;
    for (const auto& bi : bs) rest |= bi;
    if (at(1, Named{{"A", a}, {"B", rest}}, "A against the remainder") ||
        at(1, Named{{"A", sp->a}, {"B", sp->b}}, "sparse pair"))
        return at.result();
    at(3, Named{{"F", VertexSet::single(g.first())}}, "single vertex");
    return at.result();
}

// --- growing anticomplete pairs ----------------------------------------------

namespace {

// Copies the outcome sets of an inner certificate (and its r) into bullet `to`.
bool map_outcome(Attempt& at, const Certificate& inner, int to, const std::vector<std::string>& names,
                 std::optional<long> r, const std::string& why) {
    return at(
        to,
        [&](Certificate& c) {
            for (const auto& n : names) c.put_set(n, inner.set(n));
            if (r) c.put_param("r", Rational(*r));
        },
        why);
}

bool map_grow(Attempt& at, const Certificate& inner, const std::string& why) {
    std::optional<long> r;
    if (inner.has_param("r")) r = mp::numerator(inner.param("r")).convert_to<long>();
    switch (inner.bullet) {
    case 2:
        return map_outcome(at, inner, 2, {"X", "Y"}, std::nullopt, why);
    case 3:
        return map_outcome(at, inner, 3, {"X", "Y"}, r, why);
    case 4:
        return map_outcome(at, inner, 4, {"F"}, r, why);
    default:
        return false;
    }
}

}  // namespace

Certificate grow_anticomplete(Ctx& ctx, const VertexSet& g, const Rational& c, int s) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "grow_anticomplete", 0, g);
    hyp.put_param("c", c);
    hyp.put_param("s", Rational(s));
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);

    auto from_decompose = [&](const Certificate& d, int r) {
        switch (d.bullet) {
        case 1:
            return map_outcome(at, d, 1, {"A", "B"}, std::nullopt, "anticomplete pair from the decomposition");
        case 2:
            return s == 0 ? map_outcome(at, d, 2, {"X", "Y"}, std::nullopt, "complete pair from the decomposition")
                          : map_outcome(at, d, 3, {"X", "Y"}, r, "complete pair from the decomposition");
        default:
            return map_outcome(at, d, 4, {"F"}, r, "dense subgraph from the decomposition");
        }
    };

    if (s == 0) {
        if (self_dense(o, g, c).dense && at(4, Named{{"F", g}}, "G dense", {{"r", 0}})) return at.result();
        try {
            Nested nest(ctx);
            if (from_decompose(decompose_anti(ctx, g, c, pow(c, 4) * cg, (1 - c * c) * cg), 0)) return at.result();
        } catch (const HypothesisError& e) {
            ctx.note("skip", {{"reason", e.what()}});
        } catch (const NoOutcome& e) {
            ctx.note("skip", {{"reason", e.what()}});
        }
        // chi(G) <= c^-3/2 or chi(G) <= c^-4
        if (at(4, Named{{"F", VertexSet::single(g.first())}}, "single vertex", {{"r", 0}})) return at.result();
        if (auto e = first_edge(gr, g))
            at(2, Named{{"X", VertexSet::single(e->first)}, {"Y", VertexSet::single(e->second)}}, "single edge");
        return at.result();
    }

    // Sparsity claim on G itself: the level below either finds an
    // anticomplete pair or an outcome for this level.
    try {
        Nested nest(ctx);
        if (map_grow(at, grow_anticomplete(ctx, g, c, s - 1), "outcome one level down")) return at.result();
    } catch (const NoOutcome& e) {
        ctx.note("skip", {{"reason", e.what()}});
    }
    Rational eps = pow(c, 1L << s);
    if (self_dense(o, g, eps).dense && at(4, Named{{"F", g}}, "G dense", {{"r", s}})) return at.result();
    try {
        Nested nest(ctx);
        if (from_decompose(decompose_anti(ctx, g, eps, (1 - 3 * eps) * cg, (1 - eps * eps) * cg), s))
            return at.result();
    } catch (const SparsityError& e) {
        ctx.note("not sparse", {{"F", js(e.f)}});
        try {
            Nested nest(ctx);
            if (map_grow(at, grow_anticomplete(ctx, e.f, c, s - 1), "outcome one level down inside F"))
                return at.result();
        } catch (const NoOutcome& ex) {
            ctx.note("skip", {{"reason", ex.what()}});
        }
    } catch (const HypothesisError& e) {
        ctx.note("skip", {{"reason", e.what()}});
    } catch (const NoOutcome& e) {
        ctx.note("skip", {{"reason", e.what()}});
    }
    for (int r = 0; r <= s; ++r)
        if (at(4, Named{{"F", VertexSet::single(g.first())}}, "single vertex", {{"r", r}})) return at.result();
    if (auto e = first_edge(gr, g)) {
        Named pair{{"X", VertexSet::single(e->first)}, {"Y", VertexSet::single(e->second)}};
        if (at(2, pair, "single edge")) return at.result();
        for (int r = 1; r <= s; ++r)
            if (at(3, pair, "single edge", {{"r", r}})) return at.result();
    }
    return at.result();
}

Certificate anti_or_dense(Ctx& ctx, const VertexSet& g, const Rational& a, const Rational& c) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "anti_or_dense", 0, g);
    hyp.put_param("a", a);
    hyp.put_param("c", c);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);
    VertexSet m = maximal_component(o, g);

    // largest s with c^(-2^s a) <= chi(G)
    constexpr int kMaxLevel = 12;
    int s = 0;
    while (s < kMaxLevel) {
        Rational e = -a * Rational(Int(1) << (s + 1));
        Threshold t = Threshold::power(1, c, mp::numerator(e), mp::denominator(e).convert_to<long>());
        if (compare(Int(cg), t) < 0) break;
        ++s;
    }
    ctx.note("level", {{"s", s}, {"component", js(m)}});

    auto cutset_vertex = [&](int v, const std::string& why) {
        VertexSet nv = gr.nbrs(v) & g;
        int cn = o.chi(nv);
        Rational y = cn < cg ? 1 - Rational(cn, cg) : Rational(1, 2 * cg);
        return at(2, Named{{"X", VertexSet::single(v)}, {"Y", nv}}, why, {{"y", y}});
    };

    try {
        Nested nest(ctx);
        Certificate inner = grow_anticomplete(ctx, m, c, s);
        long r = inner.has_param("r") ? mp::numerator(inner.param("r")).convert_to<long>() : 0;
        switch (inner.bullet) {
        case 1: {
            VertexSet a0 = maximal_component(o, inner.set("A")), b0 = maximal_component(o, inner.set("B"));
            Cutset cut = minimal_cutset(gr, m, a0, b0);
            ctx.note("cutset", {{"A", js(cut.a)}, {"B", js(cut.b)}, {"S", js(cut.z)}});
            for (int v : cut.z)
                if (cutset_vertex(v, "cutset vertex and its neighbourhood")) return at.result();
            break;
        }
        case 2:
            if (map_outcome(at, inner, 1, {"X", "Y"}, std::nullopt, "complete pair from growth")) return at.result();
            break;
        case 3:
            if (at(
                    2,
                    [&](Certificate& cc) {
                        cc.put_set("X", inner.set("X"));
                        cc.put_set("Y", inner.set("Y"));
                        cc.put_param("y", pow(c, 1L << (r - 1)));
                    },
                    "unbalanced complete pair from growth"))
                return at.result();
            break;
        default:
            if (at(
                    3,
                    [&](Certificate& cc) {
                        cc.put_set("F", inner.set("F"));
                        cc.put_param("eps", pow(c, 1L << r));
                    },
                    "dense subgraph from growth"))
                return at.result();
        }
    } catch (const HypothesisError& e) {
        ctx.note("skip", {{"reason", e.what()}});
    } catch (const NoOutcome& e) {
        ctx.note("skip", {{"reason", e.what()}});
    }
    if (auto e = first_edge(gr, m))
        if (at(1, Named{{"X", VertexSet::single(e->first)}, {"Y", VertexSet::single(e->second)}}, "single edge"))
            return at.result();
    int best = m.first(), best_chi = -1;
    for (int v : m)
        if (int x = o.chi(gr.nbrs(v) & g); x > best_chi) {
            best_chi = x;
            best = v;
        }
    cutset_vertex(best, "vertex with the largest neighbourhood");
    return at.result();
}

}  // namespace chiforge
