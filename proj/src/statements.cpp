// Lemma statements: what a certificate of each lemma and bullet must show.
#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "chiforge/certificate.hpp"
#include "chiforge/structure.hpp"

namespace chiforge {

namespace mp = boost::multiprecision;

Rational phi_eval(const Rational& c, int r, int s) {
    if (r < 0 || r > s) throw RangeError("phi needs 0 <= r <= s");
    Rational out = 1;
    for (int i = r + 1; i <= s; ++i) out *= 1 - pow(c, 1L << (i + 1));
    return out;
}

Rational rodl_delta(const Rational& eps) {
    if (eps <= 0 || eps >= 1) throw RangeError("eps must lie in (0,1)");
    long m = 0;
    while (pow2(m) * eps < 1) ++m;
    return pow(eps * eps / 128, m);
}

namespace {

constexpr int kMaxS = 12;

Threshold K(const Rational& r) { return Threshold::constant(r); }

// coef * base^e + c0 for a rational exponent e
Threshold P(const Rational& coef, const Rational& base, const Rational& e, const Rational& c0 = 0) {
    Int den = mp::denominator(e);
    if (den > Int(1L << 30)) throw RangeError("exponent denominator too large");
    return Threshold::power(coef, base, mp::numerator(e), den.convert_to<long>(), c0);
}

struct Builder {
    Oracle& o;
    const Certificate& c;
    Statement st;
    bool strict;

    Builder(Oracle& oracle, const Certificate& cert) : o(oracle), c(cert), strict(cert.mode == Mode::strict) {}

    void range(bool ok, const std::string& msg) {
        if (!ok) st.range_errors.push_back(msg);
    }
    Rational par(const std::string& name) {
        if (!c.has_param(name)) {
            st.range_errors.push_back("missing parameter " + name);
            return 1;
        }
        return c.param(name);
    }
    bool integral(const Rational& r) { return mp::denominator(r) == 1; }
    long as_long(const Rational& r, const std::string& name) {
        if (!integral(r) || mp::abs(r) > Rational(1L << 30)) {
            st.range_errors.push_back(name + " must be a small integer");
            return 0;
        }
        return mp::numerator(r).convert_to<long>();
    }
    bool sets(std::initializer_list<std::string> names) {
        bool ok = true;
        for (const auto& n : names)
            if (!c.has_set(n)) {
                st.range_errors.push_back("missing set " + n);
                ok = false;
            }
        return ok;
    }
    int chi(const std::string& name) { return o.chi(c.set(name)); }

    void rel(const std::string& r, const std::string& a, const std::string& b = "",
             std::optional<Threshold> eps = std::nullopt) {
        st.relations.push_back({r, a, b, std::move(eps)});
    }
    Claim claim(const std::string& term, const std::string& op, const Threshold& t, const std::string& meaning) {
        Claim cl;
        cl.term = term;
        cl.lhs = evaluate_term(o, c, term);
        cl.rel = op;
        if (t.is_constant())
            cl.rhs = t.constant_value();
        else
            cl.rhs = Rational(op == ">=" ? ceil(t) : floor(t));
        cl.meaning = meaning;
        return cl;
    }
    void ge(const std::string& term, const Threshold& t, const std::string& meaning) {
        st.claims.push_back(claim(term, ">=", t, meaning));
    }
    void le(const std::string& term, const Threshold& t, const std::string& meaning) {
        st.claims.push_back(claim(term, "<=", t, meaning));
    }
    void gate(const std::string& term, const Threshold& t, const std::string& meaning) {
        st.gates.push_back(claim(term, ">=", t, meaning));
    }
    void within(const std::string& a, const std::string& b) { rel("subset", a, b); }

    // Blocks prefix1..prefixk inside `in`, with the pair relation `tag`
    // (complete, anticomplete, pure, dense, anticomplete_or_dense).
    int blockade(const std::string& prefix, const std::string& in, const std::string& tag,
                 std::optional<Threshold> eps = std::nullopt) {
        auto names = c.blocks(prefix);
        for (const auto& b : names) {
            rel("nonempty", b);
            within(b, in);
        }
        for (std::size_t j = 0; j < names.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                if (tag == "dense") {
                    rel("disjoint", names[j], names[i]);
                    rel("dense_to", names[j], names[i], eps);
                } else if (tag == "anticomplete_or_dense") {
                    rel("disjoint", names[j], names[i]);
                    rel("anticomplete_or_dense", names[j], names[i], eps);
                } else {
                    rel(tag, names[i], names[j]);
                }
            }
        return static_cast<int>(names.size());
    }
    // Every block has χ >= k^(-e) * χ(ref).
    void blocks_at_least_power(const std::string& prefix, int k, const Rational& e, int chi_ref,
                               const std::string& meaning) {
        if (k == 0) return;
        for (const auto& b : c.blocks(prefix)) ge("chi(" + b + ")", P(chi_ref, k, -e), meaning);
    }
    void blocks_at_least(const std::string& prefix, const Threshold& t, const std::string& meaning) {
        for (const auto& b : c.blocks(prefix)) ge("chi(" + b + ")", t, meaning);
    }
    // 1-based index list drawn from [1, hi], strictly increasing
    std::vector<int> index_list(const std::string& name, int hi) {
        if (!c.has_list(name)) {
            st.range_errors.push_back("missing list " + name);
            return {};
        }
        const auto& l = c.list(name);
        for (std::size_t t = 0; t < l.size(); ++t)
            if (l[t] < 1 || l[t] > hi || (t && l[t] <= l[t - 1])) {
                st.range_errors.push_back("list " + name + " must increase within [1," + std::to_string(hi) + "]");
                return {};
            }
        return l;
    }
    int index_param(const std::string& name, int hi) {
        long v = as_long(par(name), name);
        range(v >= 1 && v <= hi, name + " must lie in [1," + std::to_string(hi) + "]");
        return static_cast<int>(v);
    }
    void bullets(int n) { range(c.bullet >= 0 && c.bullet <= n, "unknown bullet " + std::to_string(c.bullet)); }
    // Bullet 0 asks for the hypotheses and gates only.
    bool hyp() {
        if (c.bullet != 0) return false;
        st.kind = "hypotheses";
        return true;
    }
    bool ok() const { return st.range_errors.empty(); }

    // v, A ⊆ N(v), B ∩ N[v] = ∅, A and B nonempty
    void vab() {
        rel("singleton", "v");
        within("v", "G");
        within("A", "G");
        within("B", "G");
        rel("nonempty", "A");
        rel("nonempty", "B");
        rel("in_nbhd", "A", "v");
        rel("off_closed_nbhd", "B", "v");
    }
};

using Rule = std::function<void(Builder&)>;

void gyarfas(Builder& b) {
    b.bullets(1);
    if (!b.sets({"G"}) || !b.ok()) return;
    b.ge("chi(G)", K(2), "chi(G) >= 2");
    if (b.hyp() || !b.sets({"v", "N"})) return;
    b.st.kind = "vertex";
    b.rel("singleton", "v");
    b.within("v", "G");
    b.rel("nbhd", "N", "v");
    b.ge("chi(N)", K(Rational(b.chi("G"), 3)), "chi(N(v)) >= chi(G)/3");
}

void bip(Builder& b) {
    Rational eps = b.par("eps");
    b.range(eps > 0 && eps <= Rational(1, 4), "eps must lie in (0,1/4]");
    b.bullets(3);
    if (!b.sets({"G", "v", "A", "B"}) || !b.ok()) return;
    b.vab();
    b.rel("dense_to", "B", "A", K(eps));
    int ca = b.chi("A"), cb = b.chi("B");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"X", "Y"})) return;
        b.st.kind = "pure_pair";
        b.within("X", "A");
        b.within("Y", "B");
        b.rel("nonempty", "X");
        b.rel("nonempty", "Y");
        b.rel("pure", "X", "Y");
        b.ge("chi(X)", K(eps * ca), "chi(X) >= eps chi(A)");
        b.ge("chi(Y)", K(eps * cb), "chi(Y) >= eps chi(B)");
    } else {
        std::string s = b.c.bullet == 2 ? "C" : "D", in = b.c.bullet == 2 ? "A" : "B";
        if (!b.sets({s})) return;
        b.st.kind = "dense_subgraph";
        b.within(s, in);
        b.rel("nonempty", s);
        b.rel("self_dense", s, "", K(4 * eps));
        b.ge("chi(" + s + ")", K(Rational(b.chi(in), 2)), "chi(" + s + ") >= chi(" + in + ")/2");
    }
}

void pure_pair_or_dense(Builder& b, const Rational& eps, const Rational& delta, const std::string& pair_rel) {
    b.bullets(2);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"X", "Y"})) return;
        b.st.kind = pair_rel + "_pair";
        b.within("X", "G");
        b.within("Y", "G");
        b.rel("nonempty", "X");
        b.rel("nonempty", "Y");
        b.rel(pair_rel, "X", "Y");
        b.ge("chi(X)", K(delta * cg), "chi(X) >= delta chi(G)");
        b.ge("chi(Y)", K(delta * cg), "chi(Y) >= delta chi(G)");
    } else {
        if (!b.sets({"F"})) return;
        b.st.kind = "dense_subgraph";
        b.within("F", "G");
        b.rel("nonempty", "F");
        b.rel("self_dense", "F", "", K(eps));
        b.ge("chi(F)", K(delta * cg), "chi(F) >= delta chi(G)");
    }
}

void pure_or_dense_rule(Builder& b) {
    Rational eps = b.par("eps"), delta = b.par("delta");
    b.range(eps > 0 && eps < 1, "eps must lie in (0,1)");
    b.range(delta > 0 && delta * 128 <= eps * eps, "delta must lie in (0, eps^2/128]");
    pure_pair_or_dense(b, eps, delta, "pure");
}

void rodl(Builder& b) {
    Rational eps = b.par("eps"), delta = b.par("delta");
    b.range(eps > 0 && eps < 1, "eps must lie in (0,1)");
    if (b.ok()) b.range(delta == rodl_delta(eps), "delta must equal eta^ceil(log2(1/eps)), eta = eps^2/128");
    pure_pair_or_dense(b, eps, delta, "anticomplete");
}

void complete_pair(Builder& b) {
    b.within("X", "G");
    b.within("Y", "G");
    b.rel("nonempty", "X");
    b.rel("nonempty", "Y");
    b.rel("complete", "X", "Y");
}

void anticomplete_pair(Builder& b) {
    b.within("A", "G");
    b.within("B", "G");
    b.rel("nonempty", "A");
    b.rel("nonempty", "B");
    b.rel("anticomplete", "A", "B");
}

void dense_f(Builder& b, const Threshold& eps) {
    b.within("F", "G");
    b.rel("nonempty", "F");
    b.rel("self_dense", "F", "", eps);
}

void decompose(Builder& b) {
    Rational eps = b.par("eps"), p = b.par("p"), q = b.par("q");
    b.range(eps > 0 && eps <= Rational(1, 4), "eps must lie in (0,1/4]");
    b.bullets(3);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    Rational e2 = eps * eps, e4 = e2 * e2;
    b.range(p > 0 && p <= q && q <= (1 - e2) * cg, "need 0 < p <= q <= (1-eps^2) chi(G)");
    if (!b.ok()) return;
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"A", "B"})) return;
        b.st.kind = "anticomplete_pair";
        anticomplete_pair(b);
        b.ge("chi(A)", K(q - 2 * e4 * cg), "chi(A) >= q - 2 eps^4 chi(G)");
        b.ge("chi(B)", K((1 - e2) * cg), "chi(B) >= (1-eps^2) chi(G)");
    } else if (b.c.bullet == 2) {
        if (!b.sets({"X", "Y"})) return;
        b.st.kind = "complete_pair";
        complete_pair(b);
        b.ge("chi(X)", K(e4 * cg), "chi(X) >= eps^4 chi(G)");
        b.ge("chi(Y)", K(p), "chi(Y) >= p");
    } else {
        if (!b.sets({"F"})) return;
        b.st.kind = "dense_subgraph";
        dense_f(b, K(eps));
        b.ge("chi(F)", K(2 * e2 * eps * cg), "chi(F) >= 2 eps^3 chi(G)");
    }
}

void grow(Builder& b) {
    Rational c = b.par("c");
    long s = b.as_long(b.par("s"), "s");
    b.range(c > 0 && c <= pow2(-9), "c must lie in (0,2^-9]");
    b.range(s >= 0 && s <= kMaxS, "s must lie in [0," + std::to_string(kMaxS) + "]");
    b.bullets(4);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"A", "B"})) return;
        b.st.kind = "anticomplete_pair";
        anticomplete_pair(b);
        Threshold t = P(-2 * cg, c, Rational(Int(1) << (s + 1)), cg);
        b.ge("chi(A)", t, "chi(A) >= (1 - 2c^(2^(s+1))) chi(G)");
        b.ge("chi(B)", t, "chi(B) >= (1 - 2c^(2^(s+1))) chi(G)");
        return;
    }
    if (b.c.bullet == 2) {
        if (!b.sets({"X", "Y"})) return;
        b.st.kind = "complete_pair";
        complete_pair(b);
        Rational t = phi_eval(c, 0, s) * pow(c, 4) * cg;
        b.ge("chi(X)", K(t), "chi(X) >= phi_s(c) c^4 chi(G)");
        b.ge("chi(Y)", K(t), "chi(Y) >= phi_s(c) c^4 chi(G)");
        return;
    }
    long r = b.as_long(b.par("r"), "r");
    if (b.c.bullet == 3) {
        b.range(r >= 1 && r <= s, "r must lie in [1,s]");
        if (!b.sets({"X", "Y"}) || !b.ok()) return;
        b.st.kind = "complete_pair";
        complete_pair(b);
        Rational phi = phi_eval(c, r, s) * cg;
        b.ge("chi(X)", P(phi, c, Rational(Int(1) << (r + 2))), "chi(X) >= phi_{r,s} c^(2^(r+2)) chi(G)");
        b.ge("chi(Y)", P(-3 * phi, c, Rational(Int(1) << r), phi), "chi(Y) >= phi_{r,s} (1 - 3c^(2^r)) chi(G)");
    } else {
        b.range(r >= 0 && r <= s, "r must lie in [0,s]");
        if (!b.sets({"F"}) || !b.ok()) return;
        b.st.kind = "dense_subgraph";
        dense_f(b, P(1, c, Rational(Int(1) << r)));
        b.ge("chi(F)", P(2 * phi_eval(c, r, s) * cg, c, Rational(3 * (Int(1) << r))),
             "chi(F) >= phi_{r,s} 2c^(3 2^r) chi(G)");
    }
}

void anti_or_dense_rule(Builder& b) {
    Rational a = b.par("a"), c = b.par("c");
    b.range(a >= 5, "a must be >= 5");
    b.range(c > 0 && c <= pow2(-9), "c must lie in (0,2^-9]");
    b.bullets(3);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    b.gate("chi(G)", P(1, c, -a), "chi(G) >= c^-a");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"X", "Y"})) return;
        b.st.kind = "complete_pair";
        complete_pair(b);
        Rational t = pow(c, 5) * cg;
        b.ge("chi(X)", K(t), "chi(X) >= c^5 chi(G)");
        b.ge("chi(Y)", K(t), "chi(Y) >= c^5 chi(G)");
    } else if (b.c.bullet == 2) {
        Rational y = b.par("y");
        b.range(y > 0 && y < 1, "y must lie in (0,1)");
        if (!b.sets({"X", "Y"}) || !b.ok()) return;
        b.st.kind = "complete_pair";
        complete_pair(b);
        b.ge("chi(X)", P(cg, y, 2 * a), "chi(X) >= y^(2a) chi(G)");
        b.ge("chi(Y)", K((1 - y) * cg), "chi(Y) >= (1-y) chi(G)");
    } else {
        Rational eps = b.par("eps");
        b.range(eps > 0 && eps <= c, "eps must lie in (0,c]");
        if (!b.sets({"F"}) || !b.ok()) return;
        b.st.kind = "dense_subgraph";
        // eps >= chi(G)^(-1/a)  <=>  chi(G) >= eps^(-a)
        b.ge("chi(G)", P(1, eps, -a), "eps >= chi(G)^(-1/a)");
        dense_f(b, K(eps));
        b.ge("chi(F)", K(eps * eps * eps * cg), "chi(F) >= eps^3 chi(G)");
    }
}

// dense-to pair outcome X ⊆ A, Y ⊆ B (or inside G)
void dense_pair(Builder& b, const std::string& in_x, const std::string& in_y, const Rational& x) {
    b.st.kind = "dense_to_pair";
    b.within("X", in_x);
    b.within("Y", in_y);
    b.rel("nonempty", "Y");
    b.rel("disjoint", "X", "Y");
    b.rel("dense_to", "X", "Y", K(x));
}

void avg_p5(Builder& b) {
    Rational r = b.par("r"), y = b.par("y"), qr = b.par("q");
    b.range(r > 0, "r must be positive");
    b.range(y > 0 && y <= Rational(1, 2), "y must lie in (0,1/2]");
    b.range(b.integral(qr) && qr >= 1 && 2 * y * qr <= 1, "q must be an integer in [1, 1/(2y)]");
    b.bullets(2);
    if (!b.sets({"G", "v", "A", "B"}) || !b.ok()) return;
    long q = mp::numerator(qr).convert_to<long>();
    b.vab();
    b.rel("nonnbr_at_most", "A", "B", K(r));
    int ca = b.chi("A"), cb = b.chi("B");
    b.gate("chi(A)", K(q * r), "chi(A) >= q r");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"X", "Y"})) return;
        dense_pair(b, "A", "B", y);
        b.ge("chi(X)", K(ca - q * r), "chi(X) >= chi(A) - q r");
        b.ge("chi(Y)", K(y * cb / 2), "chi(Y) >= y chi(B)/2");
    } else {
        b.st.kind = "pure_blockade";
        b.blockade("B_", "B", "pure");
        b.ge("blocks(B_)", K(q), "k >= q");
        b.blocks_at_least("B_", K(y * y * cb / 2), "chi(B_i) >= y^2 chi(B)/2");
    }
}

Rational desk_cap(const Builder& b, long strict_exp) { return b.strict ? pow2(-strict_exp) : Rational(1, 2); }

void dense_shrink(Builder& b) {
    Rational x = b.par("x"), y = b.par("y");
    b.range(x > 0 && x <= y && y <= desk_cap(b, 8), b.strict ? "need 0 < x <= y <= 2^-8" : "need 0 < x <= y <= 1/2");
    b.bullets(2);
    if (!b.sets({"G", "v", "A", "B"}) || !b.ok()) return;
    b.vab();
    b.rel("dense_to", "A", "B", K(y));
    int ca = b.chi("A"), cb = b.chi("B");
    b.gate("chi(A)", K(2 / x), "chi(A) >= 2/x");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"X", "Y"})) return;
        dense_pair(b, "A", "B", x);
        b.ge("chi(X)", K(ca - 2 / x), "chi(X) >= chi(A) - 2/x");
        b.ge("chi(Y)", K(Rational(cb, 2)), "chi(Y) >= chi(B)/2");
    } else {
        b.st.kind = "pure_blockade";
        int k = b.blockade("B_", "B", "pure");
        b.ge("blocks(B_)", P(1, y, Rational(-1, 2)), "k >= y^(-1/2)");
        b.le("blocks(B_)", K(1 / (x * x)), "k <= x^-2");
        b.blocks_at_least_power("B_", k, 2, cb, "chi(B_i) >= k^-2 chi(B)");
    }
}

void dense_combine(Builder& b) {
    Rational r = b.par("r"), x = b.par("x"), y = b.par("y");
    Rational cap = desk_cap(b, 8);
    b.range(r > 0, "r must be positive");
    b.range(x > 0 && x <= y && y <= cap, b.strict ? "need 0 < x <= y <= 2^-8" : "need 0 < x <= y <= 1/2");
    if (b.ok()) {
        Int q = ceil(P(1, y, Rational(-1, 2)));
        b.range(2 * y * Rational(q) <= 1, "q = ceil(y^(-1/2)) exceeds 1/(2y)");
    }
    b.bullets(2);
    if (!b.sets({"G", "v", "A", "B"}) || !b.ok()) return;
    b.vab();
    b.rel("nonnbr_at_most", "A", "B", K(r));
    int ca = b.chi("A"), cb = b.chi("B");
    b.gate("chi(A)", P(2 * r, y, Rational(-1, 2), 2 / x), "chi(A) >= 2 y^(-1/2) r + 2/x");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        if (!b.sets({"X", "Y"})) return;
        dense_pair(b, "A", "B", x);
        b.ge("chi(X)", P(-2 * r, y, Rational(-1, 2), ca - 2 / x), "chi(X) >= chi(A) - 2 y^(-1/2) r - 2/x");
        b.ge("chi(Y)", K(y * y * cb / 4), "chi(Y) >= y^2 chi(B)/4");
    } else {
        b.st.kind = "pure_blockade";
        int k = b.blockade("B_", "B", "pure");
        b.ge("blocks(B_)", P(1, y, Rational(-1, 2)), "k >= y^(-1/2)");
        b.le("blocks(B_)", K(1 / (x * x)), "k <= x^-2");
        b.blocks_at_least_power("B_", k, 7, cb, "chi(B_i) >= k^-7 chi(B)");
    }
}

void incre1(Builder& b) {
    Rational x = b.par("x"), y = b.par("y");
    b.range(x > 0 && x <= y && y <= desk_cap(b, 8), b.strict ? "need 0 < x <= y <= 2^-8" : "need 0 < x <= y <= 1/2");
    b.bullets(3);
    if (!b.sets({"G"}) || !b.ok()) return;
    b.rel("self_dense", "G", "", K(y));
    int cg = b.chi("G");
    b.gate("chi(G)", K(1 / (x * x)), "chi(G) >= x^-2");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        b.st.kind = "already_dense";
        b.rel("self_dense", "G", "", K(y * y));
    } else if (b.c.bullet == 2) {
        if (!b.sets({"X", "Y"})) return;
        dense_pair(b, "G", "G", x);
        b.ge("chi(X)", P(-3 * cg, y, Rational(1, 2), cg), "chi(X) >= (1 - 3y^(1/2)) chi(G)");
        b.ge("chi(Y)", K(pow(y, 4) * cg / 4), "chi(Y) >= y^4 chi(G)/4");
    } else {
        b.st.kind = "pure_blockade";
        int k = b.blockade("B_", "G", "pure");
        b.ge("blocks(B_)", P(1, y, Rational(-1, 2)), "k >= y^(-1/2)");
        b.le("blocks(B_)", K(1 / (x * x)), "k <= x^-2");
        b.blocks_at_least_power("B_", k, 11, cg, "chi(B_i) >= k^-11 chi(G)");
    }
}

void round1(Builder& b) {
    Rational x = b.par("x"), a = b.par("a");
    b.range(a >= 1, "a must be >= 1");
    if (b.strict)
        b.range(x > 0 && b.ok() && compare_power(x, 2, -mp::numerator(a), mp::denominator(a).convert_to<long>()) <= 0,
                "x must lie in (0, 2^-a]");
    else
        b.range(x > 0 && x < Rational(1, 2), "x must lie in (0,1/2)");
    b.bullets(2);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    b.gate("chi(G)", P(1, x, -a), "chi(G) >= x^-a");
    if (b.hyp()) return;
    int k;
    if (b.c.bullet == 1) {
        b.st.kind = "pure_blockade";
        k = b.blockade("B_", "G", "pure");
    } else {
        b.st.kind = "dense_blockade";
        k = b.blockade("B_", "G", "dense", K(x));
    }
    b.ge("blocks(B_)", K(2), "k >= 2");
    b.le("blocks(B_)", K(1 / x), "k <= 1/x");
    b.blocks_at_least_power("B_", k, a, cg, "chi(B_i) >= k^-a chi(G)");
}

void convert(Builder& b) {
    Rational eps = b.par("eps"), a = b.par("a");
    b.range(eps > 0 && eps <= Rational(1, 2), "eps must lie in (0,1/2]");
    b.range(a >= 1, "a must be >= 1");
    b.bullets(1);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    b.gate("chi(G)", P(1, eps, -3 * a * a), "chi(G) >= eps^(-3a^2)");
    if (b.hyp()) return;
    b.st.kind = "blockade";
    b.blockade("A_", "G", "anticomplete_or_dense", P(1, eps, a));
    b.ge("blocks(A_)", K(1 / eps), "l >= 1/eps");
    b.blocks_at_least("A_", P(cg, eps, 6 * a * a), "chi(A_i) >= eps^(6a^2) chi(G)");
}

void midway(Builder& b) {
    Rational eps = b.par("eps"), bb = b.par("b");
    b.range(eps > 0 && eps <= Rational(1, 2), "eps must lie in (0,1/2]");
    b.range(bb >= 1, "b must be >= 1");
    b.bullets(2);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    b.gate("chi(G)", P(1, eps, -bb), "chi(G) >= eps^-b");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        b.st.kind = "anticomplete_blockade";
        b.blockade("B_", "G", "anticomplete");
    } else {
        b.st.kind = "dense_blockade";
        b.blockade("B_", "G", "dense", K(eps));
    }
    b.ge("blocks(B_)", K(1 / eps), "k >= 1/eps");
    b.blocks_at_least("B_", P(cg, eps, bb), "chi(B_i) >= eps^b chi(G)");
}

// B_1..B_k pairwise anticomplete, each anticonnected, disjoint from the A sets
void extraction_hypotheses(Builder& b, const std::vector<std::string>& as, const std::vector<Threshold>& rs) {
    auto bs = b.c.blocks("B_");
    b.range(!bs.empty(), "need at least one block B_1");
    for (const auto& x : bs) {
        b.within(x, "G");
        b.rel("nonempty", x);
        b.rel("anticonnected", x);
    }
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) b.rel("anticomplete", bs[i], bs[j]);
    for (std::size_t t = 0; t < as.size(); ++t) {
        b.within(as[t], "G");
        b.rel("nonempty", as[t]);
        for (std::size_t s = 0; s < t; ++s) b.rel("disjoint", as[s], as[t]);
        for (const auto& x : bs) {
            b.rel("disjoint", as[t], x);
            b.rel("nonnbr_at_most", as[t], x, rs[t]);
        }
        b.rel("not_mixed_on_two", as[t], "B_");
    }
}

void anticomplete_extract(Builder& b) {
    Rational r = b.par("r");
    b.range(r > 0, "r must be positive");
    b.bullets(2);
    if (!b.sets({"G", "A"}) || !b.ok()) return;
    extraction_hypotheses(b, {"A"}, {K(r)});
    int k = static_cast<int>(b.c.blocks("B_").size());
    if (!b.ok()) return;
    if (b.hyp()) return;
    int ca = b.chi("A");
    if (b.c.bullet == 1) {
        auto I = b.index_list("I", k);
        if (!b.ok()) return;
        b.st.kind = "extraction";
        b.ge("count(I)", P(-1, k, Rational(1, 2), k), "|I| >= k - k^(1/2)");
        for (int i : I) {
            std::string ap = "Ap_" + std::to_string(i), bi = "B_" + std::to_string(i);
            if (!b.sets({ap})) return;
            b.within(ap, "A");
            b.rel("complete", ap, bi);
            b.ge("chi(" + ap + ")", K((1 - Rational(1, k)) * ca - k * r), "chi(A'_i) >= (1-1/k) chi(A) - k r");
        }
    } else {
        b.st.kind = "complete_blockade";
        b.blockade("D_", "A", "complete");
        b.ge("blocks(D_)", P(1, k, Rational(1, 2)), "q >= k^(1/2)");
        b.blocks_at_least("D_", K(Rational(ca, k)), "chi(D_j) >= chi(A)/k");
    }
}

void averaged_extract(Builder& b) {
    b.bullets(2);
    if (!b.sets({"G"})) return;
    auto as = b.c.blocks("A_");
    int l = static_cast<int>(as.size());
    b.range(l >= 1, "need at least one set A_1");
    std::vector<Threshold> rs;
    for (int j = 1; j <= l; ++j) {
        Rational r = b.par("r_" + std::to_string(j));
        b.range(r > 0, "r_j must be positive");
        rs.push_back(K(r));
    }
    if (!b.ok()) return;
    extraction_hypotheses(b, as, rs);
    int k = static_cast<int>(b.c.blocks("B_").size());
    if (!b.ok()) return;
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        int i = b.index_param("i", k);
        auto I = b.index_list("I", l);
        if (!b.ok()) return;
        b.st.kind = "extraction";
        b.ge("count(I)", P(-l, k, Rational(-1, 2), l), "|I| >= (1 - k^(-1/2)) l");
        for (int j : I) {
            std::string ap = "Ap_" + std::to_string(j), aj = "A_" + std::to_string(j);
            if (!b.sets({ap})) return;
            b.within(ap, aj);
            b.rel("complete", ap, "B_" + std::to_string(i));
            b.ge("chi(" + ap + ")", K((1 - Rational(1, k)) * b.chi(aj) - k * rs[j - 1].constant_value()),
                 "chi(A'_j) >= (1-1/k) chi(A_j) - k r_j");
        }
    } else {
        int j = b.index_param("j", l);
        if (!b.ok()) return;
        std::string aj = "A_" + std::to_string(j);
        b.st.kind = "complete_blockade";
        b.blockade("D_", aj, "complete");
        b.ge("blocks(D_)", P(1, k, Rational(1, 2)), "q >= k^(1/2)");
        b.blocks_at_least("D_", K(Rational(b.chi(aj), k)), "chi(D_i) >= chi(A_j)/k");
    }
}

void anticonn(Builder& b) {
    Rational y = b.par("y");
    b.range(y > 0 && y <= Rational(1, 8), "y must lie in (0,1/8]");
    b.bullets(1);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    if (b.hyp()) return;
    b.st.kind = "complete_blockade";
    b.blockade("B_", "G", "complete");
    b.ge("blocks(B_)", P(1, y, Rational(-1, 2)), "k >= y^(-1/2)");
    b.blocks_at_least("B_", K(y * cg), "chi(B_i) >= y chi(G)");
}

void incre2(Builder& b) {
    Rational y = b.par("y"), bb = b.par("b");
    b.range(y > 0 && y <= desk_cap(b, 8), b.strict ? "y must lie in (0,2^-8]" : "y must lie in (0,1/2]");
    b.range(bb >= 1, "b must be >= 1");
    b.bullets(3);
    if (!b.sets({"G"}) || !b.ok()) return;
    auto as = b.c.blocks("A_");
    int l = static_cast<int>(as.size());
    b.range(l >= 1, "need a blockade A_1..A_l");
    if (!b.ok()) return;
    b.blockade("A_", "G", "dense", K(y));
    std::string al = as.back();
    int cl = b.chi(al);
    b.gate("blocks(A_)", P(1, y, Rational(-1, 4)), "l >= y^(-1/4)");
    b.gate("chi(" + al + ")", P(1, y, -bb * bb), "chi(A_l) >= y^(-b^2)");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        b.st.kind = "dense_blockade";
        b.blockade("D_", al, "dense", P(1, y, bb));
        b.ge("blocks(D_)", P(1, y, -bb), "k >= y^-b");
        b.blocks_at_least("D_", P(cl, y, bb * bb), "chi(D_i) >= y^(b^2) chi(A_l)");
    } else if (b.c.bullet == 2) {
        auto I = b.index_list("I", l - 1);
        if (!b.sets({"Bl"}) || !b.ok()) return;
        b.st.kind = "extraction";
        b.within("Bl", al);
        b.rel("nonempty", "Bl");
        b.ge("chi(Bl)", P(cl, y, bb * bb + 1), "chi(B_l) >= y^(b^2+1) chi(A_l)");
        b.ge("count(I)", P(-2 * l, y, Rational(1, 4), l), "|I| >= (1 - 2y^(1/4)) l");
        for (int j : I) {
            std::string ap = "Ap_" + std::to_string(j), aj = "A_" + std::to_string(j);
            if (!b.sets({ap})) return;
            int cj = b.chi(aj);
            b.within(ap, aj);
            b.rel("complete", ap, "Bl");
            b.ge("chi(" + ap + ")", P(-3 * cj, y, Rational(1, 2), cj), "chi(A'_j) >= (1 - 3y^(1/2)) chi(A_j)");
        }
    } else {
        int j = b.index_param("j", l);
        if (!b.ok()) return;
        std::string aj = "A_" + std::to_string(j);
        b.st.kind = "complete_blockade";
        b.blockade("E_", aj, "complete");
        b.ge("blocks(E_)", P(1, y, Rational(-1, 4)), "q >= y^(-1/4)");
        b.blocks_at_least("E_", P(b.chi(aj), y, bb * bb + 1), "chi(E_i) >= y^(b^2+1) chi(A_j)");
    }
}

void round2(Builder& b) {
    Rational eps = b.par("eps"), a = b.par("a");
    b.range(eps > 0 && eps <= (b.strict ? pow2(-32) : Rational(1, 4)),
            b.strict ? "eps must lie in (0,2^-32]" : "eps must lie in (0,1/4]");
    b.range(a >= 1, "a must be >= 1");
    b.bullets(1);
    if (!b.sets({"G"}) || !b.ok()) return;
    b.rel("self_dense", "G", "", K(eps));
    int cg = b.chi("G");
    b.gate("chi(G)", P(1, eps, -a), "chi(G) >= eps^-a");
    if (b.hyp()) return;
    b.st.kind = "complete_blockade";
    int k = b.blockade("B_", "G", "complete");
    b.ge("blocks(B_)", P(1, eps, Rational(-1, 16)), "k >= eps^(-1/16)");
    b.blocks_at_least_power("B_", k, a, cg, "chi(B_i) >= k^-a chi(G)");
}

void main_rule(Builder& b) {
    Rational d = b.par("d");
    b.range(d >= 2 && b.integral(d), "d must be an integer >= 2");
    b.bullets(2);
    if (!b.sets({"G"}) || !b.ok()) return;
    int cg = b.chi("G");
    b.gate("chi(G)", P(1, 2, d), "chi(G) >= 2^d");
    if (b.hyp()) return;
    if (b.c.bullet == 1) {
        Rational y = b.par("y");
        b.range(y > 0 && y < 1, "y must lie in (0,1)");
        if (!b.sets({"X", "Y"}) || !b.ok()) return;
        b.st.kind = "complete_pair";
        complete_pair(b);
        b.ge("chi(X)", P(cg, y, d), "chi(X) >= y^d chi(G)");
        b.ge("chi(Y)", K((1 - y) * cg), "chi(Y) >= (1-y) chi(G)");
    } else {
        b.st.kind = "complete_blockade";
        int k = b.blockade("B_", "G", "complete");
        b.ge("blocks(B_)", K(2), "k >= 2");
        b.blocks_at_least_power("B_", k, d, cg, "chi(B_i) >= k^-d chi(G)");
    }
}

struct Entry {
    std::string id;
    char cls;
    Rule rule;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {"gyarfas_vertex", 'A', gyarfas},
        {"bip_trichotomy", 'B', bip},
        {"pure_or_dense", 'B', pure_or_dense_rule},
        {"rodl_chi", 'B', rodl},
        {"decompose_anti", 'B', decompose},
        {"grow_anticomplete", 'B', grow},
        {"anti_or_dense", 'B', anti_or_dense_rule},
        {"avg_p5", 'B', avg_p5},
        {"dense_shrink", 'B', dense_shrink},
        {"dense_combine", 'B', dense_combine},
        {"incre1_step", 'B', incre1},
        {"round1", 'B', round1},
        {"convert_blockade", 'B', convert},
        {"midway_blockade", 'B', midway},
        {"anticomplete_extract", 'B', anticomplete_extract},
        {"averaged_extract", 'B', averaged_extract},
        {"anticonn_or_complete", 'B', anticonn},
        {"incre2_step", 'B', incre2},
        {"round2", 'B', round2},
        {"main_trichotomy", 'B', main_rule},
    };
    return r;
}

const Entry* lookup(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace

bool known_lemma(const std::string& lemma) { return lookup(lemma) != nullptr; }

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& e : registry()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

char lemma_class(const std::string& lemma) {
    const Entry* e = lookup(lemma);
    if (!e) throw CertError("unknown lemma " + lemma);
    return e->cls;
}

Statement build_statement(Oracle& o, const Certificate& c) {
    const Entry* e = lookup(c.lemma);
    if (!e) throw CertError("unknown lemma " + c.lemma);
    Builder b(o, c);
    b.within("G", "G");
    try {
        e->rule(b);
    } catch (const RangeError& err) {
        b.st.range_errors.push_back(err.what());
    }
    if (b.st.kind.empty() && b.st.range_errors.empty()) b.st.range_errors.push_back("no outcome for this bullet");
    return b.st;
}

}  // namespace chiforge
