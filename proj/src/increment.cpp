// Chromatic density increment: the first round toward pure or dense
// blockades, the layout conversion, the midway lemma, the second round
// toward complete blockades and the main trichotomy.
#include "chiforge/increment.hpp"

#include <algorithm>
#include <map>

#include "procedure.hpp"

namespace chiforge {

namespace mp = boost::multiprecision;
using namespace detail;

namespace {

VertexSet one(int v) { return VertexSet::single(v); }

long as_long(const Rational& r, const char* what) {
    if (mp::denominator(r) != 1 || mp::abs(r) > Rational(1L << 30))
        throw RangeError(std::string(what) + " must be a small integer for this procedure");
    return mp::numerator(r).convert_to<long>();
}

Json js_blocks(const std::vector<VertexSet>& bs) {
    Json out = Json::array();
    for (const auto& b : bs) out.push_back(js(b));
    return out;
}

// Runs a nested procedure; recoverable failures become a "skip" note and
// roll back any waivers the failed branch recorded.
template <class F>
bool guarded(Ctx& ctx, F&& f) {
    std::size_t mark = ctx.waivers.size();
    auto skip = [&](const char* what) {
        ctx.waivers.resize(mark);
        ctx.note("skip", {{"reason", what}});
        return false;
    };
    try {
        Nested nest(ctx);
        f();
        return true;
    } catch (const RangeError& e) {
        return skip(e.what());
    } catch (const HypothesisError& e) {
        return skip(e.what());
    } catch (const NoOutcome& e) {
        return skip(e.what());
    }
}

Fill with_blocks(const std::string& prefix, std::vector<VertexSet> bs,
                 std::vector<std::pair<std::string, Rational>> params = {}) {
    return [prefix, bs = std::move(bs), params = std::move(params)](Certificate& c) {
        c.put_blocks(prefix, bs);
        for (const auto& [n, r] : params) c.put_param(n, r);
    };
}

std::vector<VertexSet> singletons(const VertexSet& s, std::size_t k) {
    std::vector<VertexSet> out;
    for (int v : s) {
        if (out.size() == k) break;
        out.push_back(one(v));
    }
    return out;
}

bool pure_blockade(const Graph& g, const std::vector<VertexSet>& bs) {
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (classify_pair(g, bs[i], bs[j]) == PairKind::mixed) return false;
    return true;
}

// Every later block (y,χ)-dense to every earlier one.
bool dense_blockade(Oracle& o, const std::vector<VertexSet>& bs, const Rational& y) {
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (!dense_to(o, bs[i], bs[j], y).dense) return false;
    return true;
}

VertexSet max_clique(Oracle& o, const VertexSet& s) { return o.extremal(s, ExtremalKind::clique).members; }

// ceil(v^(p/q)) as a long
// Block counts beyond any vertex count are clamped; no blockade can use them.
constexpr long kCountCap = 1L << 30;
long capped(const Int& v) { return v > kCountCap ? kCountCap : v.convert_to<long>(); }

// ceil(v^(p/q)) as a clamped count
long ceil_pow(const Rational& v, long p, long q) { return capped(ceil_root(v, p, q)); }

// ceil(base^e) for base > 1, clamped
long capped_pow(const Rational& base, long e) {
    Rational r = 1;
    for (long i = 0; i < e && r <= kCountCap; ++i) r *= base;
    return capped(ceil(r));
}

// v <= w^(p/q)·m, exactly, for v, w, m > 0
bool ge_power(const Rational& v, const Rational& m, const Rational& w, const Rational& e) {
    return compare_power(v / m, w, mp::numerator(e), mp::denominator(e).convert_to<long>()) >= 0;
}

}  // namespace

std::vector<VertexSet> blocks_of(const Certificate& c, const std::string& prefix) {
    std::vector<VertexSet> out;
    for (const auto& n : c.blocks(prefix)) out.push_back(c.set(n));
    return out;
}

// --- constants ----------------------------------------------------------------

ConstantLedger ledger() {
    ConstantLedger l;
    l.a1 = 200;
    l.b_mid = 6 * l.a1 * l.a1 * l.a1;
    l.a2 = 16 * l.b_mid * l.b_mid + 24 * l.b_mid;
    l.d = 32 * l.a2 + 96;
    l.eh = Rational(l.a1);
    l.formulas = {{"a1", "200"},
                  {"b_mid", "6*a1^3"},
                  {"a2", "16*b_mid^2 + 24*b_mid"},
                  {"d", "32*a2 + 96"},
                  {"eh", "a1 (clique or stable set of size k^(1/a1))"}};
    return l;
}

long midway_inner_exponent(const Rational& b) {
    long a = 1;
    while (Rational(6 * (a + 1) * (a + 1) * (a + 1)) <= b && a < 1000) ++a;
    return a;
}

long round2_midway_exponent(const Rational& a) {
    Int lo = 1, hi = 1;
    auto fits = [&](const Int& b) { return Rational(16 * b * b + 24 * b) <= a; };
    if (!fits(1)) return 1;
    while (fits(hi * 2)) hi *= 2;
    lo = hi;
    hi *= 2;
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        (fits(mid) ? lo : hi) = mid;
    }
    return lo > Int(1L << 40) ? (1L << 40) : lo.convert_to<long>();
}

Accounting account(Oracle& o, const Certificate& m) {
    Accounting acc;
    if (m.lemma != "main_trichotomy" || (m.bullet != 1 && m.bullet != 2)) {
        acc.steps.push_back("not an outcome of main_trichotomy");
        return acc;
    }
    Int d = mp::numerator(m.param("d"));
    const VertexSet& g = m.set("G");
    acc.chi_g = o.chi(g);
    acc.omega_g = o.omega(g);
    auto record = [&](bool ok, const std::string& s) {
        acc.steps.push_back((ok ? "ok: " : "fails: ") + s);
        return ok;
    };
    bool ok = true;
    if (m.bullet == 1) {
        Rational y = m.param("y");
        int wx = o.omega(m.set("X")), wy = o.omega(m.set("Y"));
        bool x_side = wx <= y * acc.omega_g;
        ok &= record(x_side || wy <= (1 - y) * acc.omega_g,
                     "omega(X) <= y omega(G) or omega(Y) <= (1-y) omega(G), as X is complete to Y");
        const VertexSet& side = m.set(x_side ? "X" : "Y");
        acc.branch = x_side ? "pair X" : "pair Y";
        acc.chi_side = o.chi(side);
        acc.omega_side = x_side ? wx : wy;
        ok &= record(compare_with_power(Int(acc.chi_side), Rational(acc.omega_side), d) <= 0,
                     "induction: chi(side) <= omega(side)^d");
        if (x_side) {
            // χ(G) <= y^-d χ(X) <= y^-d ω(X)^d <= ω(G)^d
            ok &= record(compare_power(Rational(acc.chi_side, acc.chi_g), y, d, 1) >= 0, "chi(X) >= y^d chi(G)");
        } else {
            ok &= record(acc.chi_side >= (1 - y) * acc.chi_g, "chi(Y) >= (1-y) chi(G)");
        }
    } else {
        auto bs = blocks_of(m, "B_");
        int k = static_cast<int>(bs.size());
        acc.branch = "blockade";
        ok &= record(k >= 2 && k <= acc.omega_g, "2 <= k <= omega(G), as the blockade is complete");
        int best = 0;
        for (int i = 1; i < k; ++i)
            if (o.omega(bs[i]) < o.omega(bs[best])) best = i;
        acc.omega_side = o.omega(bs[best]);
        acc.chi_side = o.chi(bs[best]);
        ok &= record(Rational(acc.omega_side) <= Rational(acc.omega_g, k), "some block has omega <= omega(G)/k");
        ok &= record(compare_with_power(Int(acc.chi_side), Rational(acc.omega_side), d) <= 0,
                     "induction: chi(B_i) <= omega(B_i)^d");
        ok &= record(compare_power(Rational(acc.chi_side, acc.chi_g), Rational(k), -d, 1) >= 0,
                     "chi(B_i) >= k^-d chi(G)");
    }
    ok &= record(compare_with_power(Int(acc.chi_g), Rational(acc.omega_g), d) <= 0, "chi(G) <= omega(G)^d");
    acc.ok = ok;
    return acc;
}

// --- partitions and layouts ---------------------------------------------------

std::optional<std::vector<VertexSet>> equal_chi_partition(Oracle& o, const VertexSet& s, int l) {
    if (l < 1) return std::nullopt;
    int cs = o.chi(s);
    Rational lo(cs, 2 * l), hi(cs, l);
    std::vector<VertexSet> parts;
    VertexSet rest = s;
    for (int i = 0; i + 1 < l; ++i) {
        VertexSet cur;
        for (int v : rest) {
            cur.insert(v);
            if (o.chi(cur) > hi) {
                cur.erase(v);
                break;
            }
        }
        if (cur.empty() || o.chi(cur) < lo) return std::nullopt;
        parts.push_back(cur);
        rest = rest - cur;
    }
    if (rest.empty() || o.chi(rest) < lo || o.chi(rest) > hi) return std::nullopt;
    parts.push_back(rest);
    return parts;
}

std::string layout_violation(Oracle& o, const Layout& l, int chi_g) {
    const Graph& g = o.graph();
    std::size_t n = l.blocks.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (l.blocks[j].empty()) return "block " + std::to_string(j + 1) + " is empty";
        for (std::size_t i = 0; i < j; ++i) {
            std::string pair = std::to_string(i + 1) + "," + std::to_string(j + 1);
            if (l.blocks[i].intersects(l.blocks[j])) return "blocks " + pair + " overlap";
            if (!l.adj[i][j]) {
                if (!is_anticomplete_to(g, l.blocks[i], l.blocks[j]))
                    return "blocks " + pair + " nonadjacent in J but not anticomplete";
                continue;
            }
            for (int v : l.blocks[j])
                if (o.chi(l.blocks[i] - g.nbrs(v)) >= l.x * chi_g)
                    return "wrong pairs of vertex " + std::to_string(v) + " in blocks " + pair + " reach x chi(G)";
        }
    }
    return {};
}

// --- round one ------------------------------------------------------------------

Certificate avg_p5(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b, const Rational& r,
                   const Rational& y, long q) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "avg_p5", 0, g);
    hyp.put_set("v", one(v));
    hyp.put_set("A", a);
    hyp.put_set("B", b);
    hyp.put_param("r", r);
    hyp.put_param("y", y);
    hyp.put_param("q", Rational(q));
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"X"};  // chi(X) lower bound may be <= 0 once gates are waived

    std::vector<VertexSet> ds, es;
    VertexSet arem = a, brem = b;
    while (static_cast<long>(es.size()) < q && !arem.empty() && !brem.empty()) {
        int cbr = o.chi(brem);
        int u = -1;
        for (int w : arem)
            if (o.chi(brem - gr.nbrs(w)) >= y * cbr) {
                u = w;
                break;
            }
        if (u < 0) {
            ctx.note("avgalt", {{"round", static_cast<int>(es.size()) + 1}, {"dense", true}});
            if (at(1, Named{{"X", arem}, {"Y", brem}}, "remaining A dense to remaining B")) return at.result();
            break;
        }
        // shrink E = B' \ N(D) while it keeps chromatic number y^2 χ(B')
        VertexSet d = one(u), e = brem - gr.nbrs(u);
        for (bool grew = true; grew;) {
            grew = false;
            for (int w : arem - d)
                if (o.chi(e - gr.nbrs(w)) >= y * y * cbr) {
                    d.insert(w);
                    e = e - gr.nbrs(w);
                    grew = true;
                    break;
                }
        }
        int ce = o.chi(e);
        ctx.note("avgalt", {{"round", static_cast<int>(es.size()) + 1}, {"u", u}, {"D", js(d)}, {"E", js(e)}, {"chiE", ce}});
        if (ce > y * cbr) {
            if (at(1, Named{{"X", arem - d}, {"Y", e}}, "A' \\ D dense to E")) return at.result();
            break;
        }
        for (int w : arem)
            if (!(gr.nbrs(w) & e).empty() || d.contains(w)) continue;
            else d.insert(w);
        ds.push_back(d);
        es.push_back(e);
        arem = arem - d;
        brem = brem - e;
    }
    ctx.note("chain", {{"D", js_blocks(ds)}, {"E", js_blocks(es)}});
    if (static_cast<long>(es.size()) == q) {
        std::vector<VertexSet> bs;
        for (const auto& e : es) bs.push_back(maximal_component(o, e));
        if (!pure_blockade(gr, bs)) p5_contradiction(gr, g, "avg_p5: maximal components not pure");
        if (at(2, with_blocks("B_", bs), "maximal components of the E chain")) return at.result();
    }
    int tries = 0;
    for (int z : b) {
        if (++tries > 8) break;
        if (at(1, Named{{"X", a & gr.nbrs(z)}, {"Y", one(z)}}, "neighbours of one vertex of B")) return at.result();
    }
    at(2, with_blocks("B_", singletons(b, static_cast<std::size_t>(q))), "single vertices of B");
    return at.result();
}

Certificate dense_shrink(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b,
                         const Rational& x, const Rational& y) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "dense_shrink", 0, g);
    hyp.put_set("v", one(v));
    hyp.put_set("A", a);
    hyp.put_set("B", b);
    hyp.put_param("x", x);
    hyp.put_param("y", y);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"X"};  // chi(X) lower bound may be <= 0 once gates are waived
    int cb = o.chi(b);

    // greedy ordering by largest nonneighbourhood inside the running intersection
    std::vector<int> order;
    std::vector<VertexSet> es;
    std::vector<int> ce;
    VertexSet cur = b, rest = a;
    while (!rest.empty()) {
        int best = -1, best_chi = -1;
        for (int w : rest)
            if (int c = o.chi(cur - gr.nbrs(w)); c > best_chi) {
                best_chi = c;
                best = w;
            }
        order.push_back(best);
        es.push_back(cur - gr.nbrs(best));
        ce.push_back(best_chi);
        cur = cur & gr.nbrs(best);
        rest.erase(best);
        if (best_chi == 0) break;
    }
    Rational t = x * x * cb;
    std::size_t l = 0;
    while (l < es.size() && ce[l] >= t) ++l;
    ctx.note("greedy order", {{"order", order}, {"chiE", ce}, {"l", l}, {"threshold", to_string(t)}});
    if (l == 0) {
        if (at(1, Named{{"X", a}, {"Y", b}}, "chi(E_1) < x^2 chi(B)")) return at.result();
    } else {
        std::vector<VertexSet> bs;
        for (std::size_t i = 0; i < l; ++i) bs.push_back(maximal_component(o, es[i]));
        if (!pure_blockade(gr, bs)) p5_contradiction(gr, g, "dense_shrink: maximal components not pure");
        // dyadic buckets: q least with 4^q x^2 >= y
        long qb = 1;
        while (pow(Rational(4), qb) * x * x < y) ++qb;
        std::vector<int> bucket(qb + 1, 0);
        for (const auto& bi : bs) {
            long p = 1;
            while (p < qb && o.chi(bi) > pow(Rational(4), p) * t) ++p;
            ++bucket[p];
        }
        bucket.erase(bucket.begin());
        ctx.note("buckets", {{"q", qb}, {"sizes", bucket}});
        if (at(2, with_blocks("B_", bs), "maximal components of E_1..E_l")) return at.result();
        VertexSet xs = a, ys = b;
        for (std::size_t i = 0; i < l; ++i) {
            xs.erase(order[i]);
            ys = ys - es[i];
        }
        if (at(1, Named{{"X", xs}, {"Y", ys}}, "trimmed pair")) return at.result();
    }
    if (at(2, with_blocks("B_", singletons(b, 2)), "two vertices of B")) return at.result();
    int tries = 0;
    for (int z : b) {
        if (++tries > 8) break;
        if (at(1, Named{{"X", a & gr.nbrs(z)}, {"Y", one(z)}}, "neighbours of one vertex of B")) return at.result();
    }
    return at.result();
}

Certificate dense_combine(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b,
                          const Rational& r, const Rational& x, const Rational& y) {
    const Graph& gr = ctx.graph();
    Certificate hyp = draft(ctx, "dense_combine", 0, g);
    hyp.put_set("v", one(v));
    hyp.put_set("A", a);
    hyp.put_set("B", b);
    hyp.put_param("r", r);
    hyp.put_param("x", x);
    hyp.put_param("y", y);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"X"};  // chi(X) lower bound may be <= 0 once gates are waived
    long q = ceil_pow(y, -1, 2);
    ctx.note("avg_p5 length", {{"q", q}});

    guarded(ctx, [&] {
        Certificate first = avg_p5(ctx, g, v, a, b, r, y, q);
        if (first.bullet == 2) {
            at(2, with_blocks("B_", blocks_of(first, "B_")), "pure blockade from avg_p5");
            return;
        }
        Certificate second = dense_shrink(ctx, g, v, first.set("X"), first.set("Y"), x, y);
        if (second.bullet == 1)
            at(1, Named{{"X", second.set("X")}, {"Y", second.set("Y")}}, "dense pair from dense_shrink");
        else
            at(2, with_blocks("B_", blocks_of(second, "B_")), "pure blockade from dense_shrink");
    });
    if (at.done()) return at.result();
    int tries = 0;
    for (int z : b) {
        if (++tries > 8) break;
        if (at(1, Named{{"X", a & gr.nbrs(z)}, {"Y", one(z)}}, "neighbours of one vertex of B")) return at.result();
    }
    at(2, with_blocks("B_", singletons(b, 2)), "two vertices of B");
    return at.result();
}

Certificate incre1_step(Ctx& ctx, const VertexSet& g, const Rational& x, const Rational& y) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "incre1_step", 0, g);
    hyp.put_param("x", x);
    hyp.put_param("y", y);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"X"};  // chi(X) lower bound may be <= 0 once gates are waived
    int cg = o.chi(g);

    auto sparse = self_dense(o, g, y * y);
    if (sparse.dense && at(1, Named{}, "G is (y^2,chi)-dense")) return at.result();
    if (!sparse.dense) {
        int v = -1;
        for (int u : g)
            if (o.chi(g - gr.closed_nbrs(u)) >= y * y * cg) {
                v = u;
                break;
            }
        VertexSet a = gr.nbrs(v) & g, b = g - gr.closed_nbrs(v);
        ctx.note("split", {{"v", v}, {"A", js(a)}, {"B", js(b)}, {"r", to_string(y * cg)}});
        guarded(ctx, [&] {
            Certificate c = dense_combine(ctx, g, v, a, b, y * cg, x, y);
            if (c.bullet == 1)
                at(2, Named{{"X", c.set("X")}, {"Y", c.set("Y")}}, "dense pair from dense_combine");
            else
                at(3, with_blocks("B_", blocks_of(c, "B_")), "pure blockade from dense_combine");
        });
        if (at.done()) return at.result();
    }
    if (at(3, with_blocks("B_", singletons(g, 2)), "two vertices")) return at.result();
    int tries = 0;
    for (int z : g) {
        if (++tries > 8) break;
        if (at(2, Named{{"X", gr.nbrs(z) & g}, {"Y", one(z)}}, "neighbourhood of one vertex")) return at.result();
    }
    return at.result();
}

namespace {

// Iterates incre1_step with 4y inside F (the branch y >= x^2 of round one).
void round1_iterate(Ctx& ctx, Attempt& at, const VertexSet& f, const Rational& x, const Rational& y) {
    long target = ceil_pow(y, -1, 4);
    std::vector<VertexSet> ys;
    VertexSet cur = f;
    for (long step = 0; step <= target; ++step) {
        std::optional<Certificate> c;
        if (!guarded(ctx, [&] { c = incre1_step(ctx, cur, x * x, 4 * y); })) return;
        if (c->bullet == 1) {
            ctx.note("denser subgraph", {{"F", js(cur)}});
            return;
        }
        if (c->bullet == 3) {
            auto bs = blocks_of(*c, "B_");
            long qk = std::max<long>(2, floor_root(Rational(static_cast<long>(bs.size())), 1, 4).convert_to<long>());
            bs.resize(std::min<std::size_t>(bs.size(), qk));
            at(1, with_blocks("B_", bs), "shortened pure blockade from incre1_step");
            return;
        }
        ys.push_back(c->set("Y"));
        cur = c->set("X");
        if (static_cast<long>(ys.size()) >= target) {
            at(2, with_blocks("B_", ys), "dense blockade from iterated incre1_step");
            return;
        }
    }
}

}  // namespace

Certificate round1(Ctx& ctx, const VertexSet& g, const Rational& x, const Rational& a) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "round1", 0, g);
    hyp.put_param("x", x);
    hyp.put_param("a", a);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);
    const Rational eps = pow2(-32), delta = pow2(-71);

    std::optional<VertexSet> f;
    guarded(ctx, [&] {
        Certificate c = pure_or_dense(ctx, g, eps, delta);
        if (c.bullet == 1)
            at(1, with_blocks("B_", {c.set("X"), c.set("Y")}), "pure pair from pure_or_dense");
        else
            f = c.set("F");
    });
    if (at.done()) return at.result();

    std::vector<VertexSet> hs;
    if (f) hs.push_back(*f);
    hs.push_back(max_clique(o, g));
    if (f) {
        // minimal y over the dyadic grid eps 2^-t inside [x^3, eps]
        Rational x3 = x * x * x, y;
        std::optional<VertexSet> pick;
        if (x3 > eps) {
            y = eps;
            pick = *f;
            ctx.note("minimal y", {{"y", to_string(y)}, {"interval", "empty"}});
        } else {
            for (Rational t = eps; t >= x3; t /= 2)
                for (const auto& h : hs)
                    if (self_dense(o, h, t).dense && o.chi(h) >= t * t * t * cg) {
                        y = t;
                        pick = h;
                        break;
                    }
            ctx.note("minimal y", {{"y", pick ? to_string(y) : "none"}, {"F", pick ? js(*pick) : Json()}});
        }
        if (pick && y >= x * x) {
            round1_iterate(ctx, at, *pick, x, y);
            if (at.done()) return at.result();
        } else if (pick) {
            long l0 = std::min<long>(ceil_pow(x, -1, 2), o.chi(*pick));
            for (long l = l0; l >= 2; --l)
                if (auto parts = equal_chi_partition(o, *pick, static_cast<int>(l))) {
                    ctx.note("partition", {{"l", l}, {"parts", js_blocks(*parts)}});
                    if (at(2, with_blocks("B_", *parts), "equal-chi partition of F")) return at.result();
                }
        }
    }
    hs.push_back(g);
    long l0 = ceil_pow(x, -1, 2);
    for (const auto& h : hs)
        for (long l = std::min<long>(l0, o.chi(h)); l >= 2; --l)
            if (auto parts = equal_chi_partition(o, h, static_cast<int>(l)))
                if (at(2, with_blocks("B_", *parts), "equal-chi partition") ||
                    at(1, with_blocks("B_", *parts), "equal-chi partition"))
                    return at.result();
    if (at(1, with_blocks("B_", singletons(g, 2)), "two vertices")) return at.result();
    (void)gr;
    return at.result();
}

// --- conversion and midway ---------------------------------------------------

Certificate convert_blockade(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& a,
                             const InnerLemma& inner_in) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "convert_blockade", 0, g);
    hyp.put_param("eps", eps);
    hyp.put_param("a", a);
    check_entry(ctx, hyp);
    long ai = as_long(a, "a");
    Rational x = pow(eps, 3 * ai);
    InnerLemma inner = inner_in ? inner_in : [x, a](Ctx& c, const VertexSet& f) { return round1(c, f, x, a); };
    Attempt at(ctx, hyp);
    int cg = o.chi(g);
    long need = capped(ceil(1 / eps));

    std::string inner_failure;
    Layout lay{{{false}}, {g}, x};
    for (int round = 0; round <= g.size(); ++round) {
        if (auto bad = layout_violation(o, lay, cg); !bad.empty()) {
            ctx.note("layout invalid", {{"reason", bad}});
            break;
        }
        ctx.note("layout", {{"blocks", js_blocks(lay.blocks)}});
        if (static_cast<long>(lay.blocks.size()) >= need) {
            at(1, with_blocks("A_", lay.blocks), "layout of length >= 1/eps");
            break;
        }
        std::size_t idx = 0;
        for (std::size_t j = 1; j < lay.blocks.size(); ++j)
            if (o.chi(lay.blocks[j]) > o.chi(lay.blocks[idx])) idx = j;
        VertexSet big = lay.blocks[idx];
        Certificate in;
        try {
            Nested nest(ctx);
            in = inner(ctx, big);
        } catch (const std::runtime_error& e) {
            if (!dynamic_cast<const NoOutcome*>(&e) && !dynamic_cast<const HypothesisError*>(&e)) throw;
            // the assumption on F is false; only the direct outcomes below remain
            inner_failure = "convert_blockade: inner lemma fails on F = " + big.str() + ": " + e.what();
            ctx.note("inner fails", {{"F", js(big)}, {"reason", e.what()}});
            break;
        }
        auto bs = blocks_of(in, "B_");
        int k = static_cast<int>(bs.size());
        ctx.note("inner blockade", {{"F", js(big)}, {"k", k}, {"tag", in.bullet == 1 ? "pure" : "dense"}});
        if (k >= need) {
            if (at(1, with_blocks("A_", bs), "inner blockade of length >= 1/eps")) return at.result();
            break;
        }
        // substitute the pattern K of the inner blockade for vertex idx of J
        int cb = o.chi(big);
        bool grows = true;
        for (const auto& bp : bs)
            if (Rational(o.chi(bp)) * pow(Rational(k), ai) < cb) grows = false;
        if (!grows) {
            ctx.note("layout stuck", {{"reason", "inner blocks below k^-a chi(A)"}});
            break;
        }
        std::size_t n = lay.blocks.size(), m = n - 1 + k;
        std::vector<std::size_t> from(m);
        std::vector<VertexSet> nb;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == idx) {
                for (int p = 0; p < k; ++p) {
                    from[nb.size()] = j;
                    nb.push_back(bs[p]);
                }
            } else {
                from[nb.size()] = j;
                nb.push_back(lay.blocks[j]);
            }
        }
        std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                if (from[i] == idx && from[j] == idx)
                    adj[i][j] = !is_anticomplete_to(gr, nb[i], nb[j]);
                else
                    adj[i][j] = from[i] == from[j] ? false : lay.adj[from[i]][from[j]];
            }
        lay = Layout{std::move(adj), std::move(nb), x};
    }
    if (at.done()) return at.result();
    if (at(1, with_blocks("A_", singletons(g, static_cast<std::size_t>(need))), "single vertices"))
        return at.result();
    if (!inner_failure.empty()) throw HypothesisError(inner_failure);
    return at.result();
}

Certificate midway_blockade(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& b) {
    Oracle& o = ctx.o;
    const Graph& gr = ctx.graph();
    Certificate hyp = draft(ctx, "midway_blockade", 0, g);
    hyp.put_param("eps", eps);
    hyp.put_param("b", b);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    long a = midway_inner_exponent(b);
    Rational ea = pow(eps, a), x = pow(eps, 3 * a * a);
    long need = capped(ceil(1 / eps));
    ctx.note("exponents", {{"a", a}, {"x", to_string(x)}});

    guarded(ctx, [&] {
        Certificate conv = convert_blockade(ctx, g, ea, Rational(a),
                                            [x, a](Ctx& c, const VertexSet& f) { return round1(c, f, x, Rational(a)); });
        auto as = blocks_of(conv, "A_");
        int l = static_cast<int>(as.size());
        std::vector<std::pair<int, int>> edges;
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < j; ++i)
                if (!is_anticomplete_to(gr, as[i], as[j])) edges.emplace_back(i, j);
        Graph pattern(l, edges);
        if (auto p = find_induced_p5(pattern))
            throw std::logic_error("midway_blockade: pattern graph contains an induced P5");
        Oracle po(pattern);
        ExtremalWitness w = po.extremal(pattern.vertices(), ExtremalKind::clique);
        ExtremalWitness s = po.extremal(pattern.vertices(), ExtremalKind::stable);
        bool clique = w.size() >= s.size();
        VertexSet pick = clique ? w.members : s.members;
        ctx.note("pattern", {{"edges", edges}, {"kind", clique ? "clique" : "stable"}, {"I", js(pick)}});
        std::vector<VertexSet> bs;
        for (int i : pick) bs.push_back(as[i]);
        at(clique ? 2 : 1, with_blocks("B_", bs), clique ? "clique of the pattern" : "stable set of the pattern");
    });
    if (at.done()) return at.result();
    VertexSet k = max_clique(o, g);
    VertexSet s = o.extremal(g, ExtremalKind::stable).members;
    if (at(2, with_blocks("B_", singletons(k, static_cast<std::size_t>(need))), "clique vertices") ||
        at(1, with_blocks("B_", singletons(s, static_cast<std::size_t>(need))), "stable vertices"))
        return at.result();
    return at.result();
}

// --- round two ---------------------------------------------------------------------

Certificate anticomplete_extract(Ctx& ctx, const VertexSet& g, const VertexSet& a, const std::vector<VertexSet>& bs,
                                 const Rational& r) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "anticomplete_extract", 0, g);
    hyp.put_set("A", a);
    hyp.put_blocks("B_", bs);
    hyp.put_param("r", r);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"Ap_"};
    int k = static_cast<int>(bs.size()), ca = o.chi(a);

    VertexSet d;
    for (int u : a)
        for (const auto& b : bs)
            if ((gr.nbrs(u) & b).empty()) {
                d.insert(u);
                break;
            }
    std::vector<VertexSet> di(k);
    for (int i = 0; i < k; ++i)
        for (int u : a - d)
            if (mixed_on(gr, u, bs[i]) == Mixed::mixed) di[i].insert(u);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < j; ++i)
            if (!di[i].empty() && !di[j].empty() && !is_complete_to(gr, di[i], di[j]))
                p5_contradiction(gr, g, "anticomplete_extract: mixed sets not complete");
    std::vector<int> in_i, out_i;
    for (int i = 0; i < k; ++i) (o.chi(di[i]) * k <= ca ? in_i : out_i).push_back(i + 1);
    ctx.note("extraction", {{"D", js(d)}, {"D_i", js_blocks(di)}, {"I", in_i}});
    if (at(
            1,
            [&](Certificate& c) {
                c.put_list("I", in_i);
                for (int i : in_i) c.put_set("Ap_" + std::to_string(i), a - d - di[i - 1]);
            },
            "A \\ (D u D_i) complete to B_i"))
        return at.result();
    std::vector<VertexSet> heavy;
    for (int i : out_i) heavy.push_back(di[i - 1]);
    at(2, with_blocks("D_", heavy), "mixed sets form a complete blockade");
    return at.result();
}

Certificate averaged_extract(Ctx& ctx, const VertexSet& g, const std::vector<VertexSet>& as,
                             const std::vector<VertexSet>& bs, const std::vector<Rational>& rs) {
    Certificate hyp = draft(ctx, "averaged_extract", 0, g);
    hyp.put_blocks("A_", as);
    hyp.put_blocks("B_", bs);
    for (std::size_t j = 0; j < rs.size(); ++j) hyp.put_param("r_" + std::to_string(j + 1), rs[j]);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"Ap_"};
    int l = static_cast<int>(as.size()), k = static_cast<int>(bs.size());

    std::vector<Certificate> per;
    for (int j = 0; j < l; ++j) {
        Nested nest(ctx);
        Certificate c = anticomplete_extract(ctx, g, as[j], bs, rs[j]);
        if (c.bullet == 2) {
            ctx.note("extraction", {{"j", j + 1}, {"bullet", 2}});
            if (at(2, with_blocks("D_", blocks_of(c, "D_"), {{"j", Rational(j + 1)}}), "complete blockade inside A_j"))
                return at.result();
        }
        per.push_back(std::move(c));
    }
    // pigeonhole: the index i in the most lists I_j
    std::vector<int> hits(k + 1, 0);
    for (const auto& c : per)
        if (c.bullet == 1)
            for (int i : c.list("I")) ++hits[i];
    int i = 1;
    for (int t = 2; t <= k; ++t)
        if (hits[t] > hits[i]) i = t;
    std::vector<int> js_;
    for (int j = 0; j < l; ++j) {
        const auto& c = per[j];
        if (c.bullet == 1 && std::ranges::find(c.list("I"), i) != c.list("I").end()) js_.push_back(j + 1);
    }
    ctx.note("averaging", {{"i", i}, {"I", js_}});
    at(
        1,
        [&](Certificate& c) {
            c.put_param("i", Rational(i));
            c.put_list("I", js_);
            for (int j : js_) c.put_set("Ap_" + std::to_string(j), per[j - 1].set("Ap_" + std::to_string(i)));
        },
        "index shared by the most extractions");
    return at.result();
}

Certificate anticonn_or_complete(Ctx& ctx, const VertexSet& g, const Rational& y) {
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "anticonn_or_complete", 0, g);
    hyp.put_param("y", y);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);
    Rational t = y * cg;
    if (t <= 1)
        throw HypothesisError("anticonn_or_complete: anticonnected S = {" + std::to_string(g.first()) +
                              "} has chi 1 >= y chi(G)");
    auto anti = components(ctx.graph(), g, ComponentMode::anticonnected);
    for (const auto& s : anti)
        if (o.chi(s) >= t)
            throw HypothesisError("anticonn_or_complete: anticonnected S = " + s.str() + " has chi >= y chi(G)");
    // group anticomponents in order; a group closes once it reaches y χ(G)
    std::vector<VertexSet> groups;
    VertexSet cur;
    for (const auto& s : anti) {
        cur |= s;
        if (o.chi(cur) >= t) {
            groups.push_back(cur);
            cur = VertexSet();
        }
    }
    ctx.note("grouping", {{"anticomponents", static_cast<int>(anti.size())}, {"groups", js_blocks(groups)},
                          {"left", js(cur)}});
    at(1, with_blocks("B_", groups), "groups of anticomponents");
    return at.result();
}

Certificate incre2_step(Ctx& ctx, const VertexSet& g, const std::vector<VertexSet>& as, const Rational& y,
                        const Rational& b) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "incre2_step", 0, g);
    hyp.put_blocks("A_", as);
    hyp.put_param("y", y);
    hyp.put_param("b", b);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    at.may_be_empty = {"Ap_"};
    long bi = as_long(b, "b");
    int l = static_cast<int>(as.size());
    const VertexSet& al = as.back();
    auto lrat = [](int v) { return Rational(v); };

    guarded(ctx, [&] {
        Certificate mw = midway_blockade(ctx, al, pow(y, bi), b);
        auto ds = blocks_of(mw, "B_");
        if (mw.bullet == 2) {
            at(1, with_blocks("D_", ds), "dense blockade from midway");
            return;
        }
        for (auto& d : ds) d = maximal_component(o, d);
        for (int j = 0; j + 1 < l; ++j)
            for (int u : as[j]) {
                int mixed = 0;
                for (const auto& d : ds) mixed += mixed_on(gr, u, d) == Mixed::mixed;
                if (mixed >= 2) p5_contradiction(gr, g, "incre2_step: vertex mixed on two anticomplete blocks");
            }
        std::vector<VertexSet> bs;
        for (const auto& d : ds) {
            VertexSet best;
            for (const auto& s : components(gr, d, ComponentMode::anticonnected))
                if (o.chi(s) > o.chi(best)) best = s;
            if (o.chi(best) >= y * o.chi(d)) {
                bs.push_back(best);
                continue;
            }
            Certificate c = anticonn_or_complete(ctx, d, y);
            at(3, with_blocks("E_", blocks_of(c, "E_").empty() ? blocks_of(c, "B_") : blocks_of(c, "E_"),
                              {{"j", lrat(l)}}),
               "complete blockade inside A_l");
            return;
        }
        std::size_t k = static_cast<std::size_t>(ceil_pow(y, -1, 2));
        if (bs.size() > k) bs.resize(k);
        ctx.note("anticonnected parts", {{"B", js_blocks(bs)}});
        if (l == 1) {
            at(
                2,
                [&](Certificate& c) {
                    c.put_list("I", {});
                    c.put_set("Bl", bs.front());
                },
                "no earlier blocks");
            return;
        }
        std::vector<VertexSet> front(as.begin(), as.end() - 1);
        std::vector<Rational> rs;
        for (const auto& aj : front) rs.push_back(y * o.chi(aj));
        Certificate avg = averaged_extract(ctx, g, front, bs, rs);
        if (avg.bullet == 1) {
            long i = mp::numerator(avg.param("i")).convert_to<long>();
            at(
                2,
                [&](Certificate& c) {
                    c.put_list("I", avg.list("I"));
                    c.put_set("Bl", bs[i - 1]);
                    for (int j : avg.list("I"))
                        c.put_set("Ap_" + std::to_string(j), avg.set("Ap_" + std::to_string(j)));
                },
                "extraction shared by most earlier blocks");
        } else {
            at(3, with_blocks("E_", blocks_of(avg, "D_"), {{"j", avg.param("j")}}), "complete blockade inside A_j");
        }
    });
    if (at.done()) return at.result();
    std::size_t kb = static_cast<std::size_t>(capped_pow(1 / y, bi));
    if (at(1, with_blocks("D_", singletons(max_clique(o, al), kb)), "clique vertices of A_l")) return at.result();
    int tries = 0;
    for (int w : al) {
        if (++tries > 8) break;
        std::vector<int> idx;
        std::vector<VertexSet> aps;
        for (int j = 0; j + 1 < l; ++j) {
            VertexSet ap = as[j] & gr.nbrs(w);
            if (!ap.empty()) {
                idx.push_back(j + 1);
                aps.push_back(ap);
            }
        }
        if (at(
                2,
                [&](Certificate& c) {
                    c.put_list("I", idx);
                    c.put_set("Bl", one(w));
                    for (std::size_t t = 0; t < idx.size(); ++t) c.put_set("Ap_" + std::to_string(idx[t]), aps[t]);
                },
                "neighbours of one vertex of A_l"))
            return at.result();
    }
    std::size_t kq = static_cast<std::size_t>(ceil_pow(y, -1, 4));
    for (int j = l; j >= 1; --j)
        if (at(3, with_blocks("E_", singletons(max_clique(o, as[j - 1]), kq), {{"j", lrat(j)}}), "clique vertices of A_j"))
            return at.result();
    return at.result();
}

namespace {

// Clique endgame: v_l in A_l, then v_i in A_i adjacent to all chosen, from the end.
std::vector<VertexSet> clique_endgame(const Graph& gr, const std::vector<VertexSet>& as) {
    std::vector<VertexSet> out;
    VertexSet common = gr.vertices();
    for (auto it = as.rbegin(); it != as.rend(); ++it) {
        VertexSet cand = *it & common;
        if (cand.empty()) break;
        int v = cand.first();
        out.push_back(one(v));
        common = common & gr.nbrs(v);
    }
    return out;
}

}  // namespace

Certificate round2(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& a) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "round2", 0, g);
    hyp.put_param("eps", eps);
    hyp.put_param("a", a);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);
    long b = round2_midway_exponent(a);

    // starting partition into q = floor(eps^(-1/2)/2) parts
    long q = floor_root(4 * eps, -1, 2).convert_to<long>();
    std::optional<std::vector<VertexSet>> parts;
    if (q >= 2 && q <= g.size()) parts = equal_chi_partition(o, g, static_cast<int>(q));
    ctx.note("partition", {{"q", q}, {"b", b}, {"parts", parts ? js_blocks(*parts) : Json()}});

    std::vector<std::vector<VertexSet>> cands;
    if (parts) cands.push_back(*parts);
    cands.push_back(singletons(g, static_cast<std::size_t>(g.size())));

    // minimal y on the dyadic grid below eps^(1/2), down to chi(G)^(-1/b)
    Rational y0 = 1;
    while (y0 * y0 > eps) y0 /= 2;
    std::optional<std::pair<Rational, std::size_t>> best;
    for (Rational y = y0; compare_power(Rational(cg), y, Int(-b), 1) >= 0; y /= 2) {
        for (std::size_t c = 0; c < cands.size(); ++c) {
            const auto& bl = cands[c];
            long l = static_cast<long>(bl.size());
            bool ok = compare_root(Rational(l, 8), y, -1, 4) >= 0 && dense_blockade(o, bl, y);
            for (const auto& blk : bl)
                if (ok && !ge_power(Rational(o.chi(blk)), Rational(cg), y, Rational(6 * b))) ok = false;
            if (ok) {
                best = {y, c};
                break;
            }
        }
        if (y < Rational(1, Int(1) << 60)) break;
    }
    std::vector<VertexSet> chosen = best ? cands[best->second] : cands.front();
    ctx.note("minimal y", {{"y", best ? to_string(best->first) : "none"}, {"blocks", static_cast<int>(chosen.size())}});

    if (best) {
        Rational y = best->first;
        // y >= chi(G)^(-3/(2b^2))  <=>  y^(-2b^2) <= chi(G)^3
        bool claim = compare_power(Rational(cg) * cg * cg, y, Int(-2) * b * b, 1) >= 0;
        if (claim) {
            long target = ceil_pow(y, -1, 8);
            std::vector<int> inds(chosen.size());
            for (std::size_t i = 0; i < inds.size(); ++i) inds[i] = static_cast<int>(i);
            std::vector<VertexSet> cs = chosen;
            std::vector<VertexSet> js_blocks_;
            while (static_cast<long>(js_blocks_.size()) < target && !inds.empty()) {
                std::vector<VertexSet> cur;
                for (int i : inds) cur.push_back(cs[i]);
                std::optional<Certificate> c;
                if (!guarded(ctx, [&] { c = incre2_step(ctx, g, cur, 2 * y, Rational(b)); })) break;
                if (c->bullet == 1) {
                    ctx.note("denser blockade", {{"j", inds.back() + 1}});
                    break;
                }
                if (c->bullet == 3) {
                    at(1, with_blocks("B_", blocks_of(*c, "E_")), "complete blockade inside a block");
                    break;
                }
                js_blocks_.push_back(c->set("Bl"));
                std::vector<int> next;
                for (int t : c->list("I")) {
                    next.push_back(inds[t - 1]);
                    cs[inds[t - 1]] = c->set("Ap_" + std::to_string(t));
                }
                inds = next;
            }
            if (!at.done() && static_cast<long>(js_blocks_.size()) >= target)
                at(1, with_blocks("B_", js_blocks_), "transversal complete blockade");
            if (at.done()) return at.result();
        }
    }
    auto ends = clique_endgame(gr, chosen);
    ctx.note("endgame", {{"k", static_cast<int>(ends.size())}});
    if (at(1, with_blocks("B_", ends), "clique endgame")) return at.result();
    at(1, with_blocks("B_", singletons(max_clique(o, g), static_cast<std::size_t>(g.size()))), "maximum clique");
    return at.result();
}

Certificate main_trichotomy(Ctx& ctx, const VertexSet& g, const Rational& d) {
    const Graph& gr = ctx.graph();
    Oracle& o = ctx.o;
    Certificate hyp = draft(ctx, "main_trichotomy", 0, g);
    hyp.put_param("d", d);
    check_entry(ctx, hyp);
    Attempt at(ctx, hyp);
    int cg = o.chi(g);
    Rational a = (d - 96) / 32, c = pow2(-32);
    ctx.note("constants", {{"a", to_string(a)}, {"c", to_string(c)}});

    guarded(ctx, [&] {
        Certificate ad = anti_or_dense(ctx, g, a + 3, c);
        if (ad.bullet == 1) {
            at(2, with_blocks("B_", {ad.set("X"), ad.set("Y")}), "balanced complete pair");
        } else if (ad.bullet == 2) {
            at(1, Named{{"X", ad.set("X")}, {"Y", ad.set("Y")}}, "unbalanced complete pair", {{"y", ad.param("y")}});
        } else {
            Certificate r2 = round2(ctx, ad.set("F"), ad.param("eps"), a);
            at(2, with_blocks("B_", blocks_of(r2, "B_")), "complete blockade in the dense subgraph");
        }
    });
    if (at.done()) return at.result();
    if (auto e = max_clique(o, g); e.size() >= 2 && at(2, with_blocks("B_", singletons(e, 2)), "single edge"))
        return at.result();
    int best = g.first(), best_chi = -1;
    for (int v : g)
        if (int x = o.chi(gr.nbrs(v) & g); x > best_chi) {
            best_chi = x;
            best = v;
        }
    Rational y = best_chi < cg ? 1 - Rational(best_chi, cg) : Rational(1, 2 * cg);
    at(1, Named{{"X", one(best)}, {"Y", gr.nbrs(best) & g}}, "vertex with the largest neighbourhood", {{"y", y}});
    return at.result();
}

}  // namespace chiforge
