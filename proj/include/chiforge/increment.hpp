#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chiforge/structure.hpp"

namespace chiforge {

// Exponent chain of the two increment rounds.
struct ConstantLedger {
    Int a1;       // round one
    Int b_mid;    // 6 a1^3
    Int a2;       // 16 b^2 + 24 b
    Int d;        // 32 a2 + 96
    Rational eh;  // Erdős–Hajnal exponent assumed for P5 (folded into a1)
    std::vector<std::pair<std::string, std::string>> formulas;
};
ConstantLedger ledger();

// Inverse of b = 6a^3 and a = 16b^2 + 24b at desk scale: the largest
// positive integer solving the inequality, or 1.
long midway_inner_exponent(const Rational& b);
long round2_midway_exponent(const Rational& a);

// Induction step behind χ(G) <= ω(G)^d, checked on one verified outcome of
// main_trichotomy: the smaller-ω side is found and χ(G) <= m·χ(side) with
// χ(side) <= ω(side)^d and m·ω(side)^d <= ω(G)^d.
struct Accounting {
    bool ok = false;
    std::string branch;  // "pair X", "pair Y" or "blockade"
    int omega_g = 0, omega_side = 0, chi_g = 0, chi_side = 0;
    std::vector<std::string> steps;
};
Accounting account(Oracle& o, const Certificate& main_outcome);

// Equal-χ partition of S into l parts with χ(S)/(2l) <= χ(part) <= χ(S)/l:
// greedy in index order, stepping back one vertex on overshoot.
std::optional<std::vector<VertexSet>> equal_chi_partition(Oracle& o, const VertexSet& s, int l);

// Pattern graph J on 0..|J|-1 with assigned blocks and the wrong-pair bound x·χ(G).
struct Layout {
    std::vector<std::vector<bool>> adj;
    std::vector<VertexSet> blocks;
    Rational x;
};
// Empty when the layout is valid, otherwise the first violated condition.
std::string layout_violation(Oracle& o, const Layout& l, int chi_g);

Certificate avg_p5(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b, const Rational& r,
                   const Rational& y, long q);
Certificate dense_shrink(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b,
                         const Rational& x, const Rational& y);
Certificate dense_combine(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b,
                          const Rational& r, const Rational& x, const Rational& y);
Certificate incre1_step(Ctx& ctx, const VertexSet& g, const Rational& x, const Rational& y);
Certificate round1(Ctx& ctx, const VertexSet& g, const Rational& x, const Rational& a);

// Supplies a pure or dense blockade (a round1-shaped certificate) inside F.
using InnerLemma = std::function<Certificate(Ctx&, const VertexSet&)>;
// Default inner lemma: round1 with x = eps^(3a).
Certificate convert_blockade(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& a,
                             const InnerLemma& inner = {});
Certificate midway_blockade(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& b);

Certificate anticomplete_extract(Ctx& ctx, const VertexSet& g, const VertexSet& a, const std::vector<VertexSet>& bs,
                                 const Rational& r);
Certificate averaged_extract(Ctx& ctx, const VertexSet& g, const std::vector<VertexSet>& as,
                             const std::vector<VertexSet>& bs, const std::vector<Rational>& rs);
Certificate anticonn_or_complete(Ctx& ctx, const VertexSet& g, const Rational& y);
Certificate incre2_step(Ctx& ctx, const VertexSet& g, const std::vector<VertexSet>& as, const Rational& y,
                        const Rational& b);
Certificate round2(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& a);
Certificate main_trichotomy(Ctx& ctx, const VertexSet& g, const Rational& d);

// Blocks prefix1, prefix2, ... of a certificate, in order.
std::vector<VertexSet> blocks_of(const Certificate& c, const std::string& prefix);

}  // namespace chiforge
