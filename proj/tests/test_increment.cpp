#include <gtest/gtest.h>

#include "chiforge/generators.hpp"
#include "chiforge/increment.hpp"

using namespace chiforge;

namespace {

Graph two_triangles() { return disjoint_union(complete_graph(3), complete_graph(3)); }

void expect_verified(const Graph& g, const Certificate& c) {
    auto v = verify_certificate(g, c);
    EXPECT_TRUE(v.accepted()) << c.lemma << " bullet " << c.bullet << ": " << v.reason;
    EXPECT_TRUE(verify_certificate(g, to_json(c)).accepted());
}

// v = 0 adjacent to A = {1, 2}; B = {3} complete to A and not adjacent to v.
Graph kite() { return Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST(Ledger, ConstantChain) {
    auto l = ledger();
    // independent evaluation of the formulas
    Int a1 = 200, b = 6 * a1 * a1 * a1, a2 = 16 * b * b + 24 * b, d = 32 * a2 + 96;
    EXPECT_EQ(l.a1, 200);
    EXPECT_EQ(l.b_mid, Int(48000000));
    EXPECT_EQ(l.a2, Int("36864001152000000"));
    EXPECT_EQ(l.d, Int("1179648036864000096"));
    EXPECT_EQ(l.b_mid, b);
    EXPECT_EQ(l.a2, a2);
    EXPECT_EQ(l.d, d);
    EXPECT_GE(l.d, 160);
}

TEST(Ledger, ExponentInverses) {
    EXPECT_EQ(midway_inner_exponent(Rational(5)), 1);
    EXPECT_EQ(midway_inner_exponent(Rational(48)), 2);
    EXPECT_EQ(midway_inner_exponent(Rational(48000000)), 200);
    EXPECT_EQ(round2_midway_exponent(Rational(39)), 1);
    EXPECT_EQ(round2_midway_exponent(Rational(112)), 2);
    EXPECT_EQ(round2_midway_exponent(Rational(Int("36864001152000000"))), 48000000);
}

TEST(EqualChiPartition, BoundsHold) {
    Graph g = complete_graph(6);
    Oracle o(g);
    auto p = equal_chi_partition(o, g.vertices(), 3);
    ASSERT_TRUE(p);
    ASSERT_EQ(p->size(), 3u);
    for (const auto& s : *p) EXPECT_EQ(o.chi(s), 2);
    EXPECT_FALSE(equal_chi_partition(o, g.vertices(), 7));
}

TEST(Layout, SingleBlockStartIsValid) {
    Graph g = random_p5free({Strategy::repair, 10, Rational(1, 2), 3});
    Oracle o(g);
    Layout l{{{false}}, {g.vertices()}, Rational(1, 8)};
    EXPECT_EQ(layout_violation(o, l, o.chi()), "");
    // two adjacent blocks with one vertex missing everything on the left
    Graph p = Graph(3, {{0, 1}});
    Oracle po(p);
    Layout bad{{{false, true}, {true, false}}, {VertexSet{0}, VertexSet{2}}, Rational(1, 2)};
    EXPECT_NE(layout_violation(po, bad, po.chi()), "");
    Layout anti{{{false, false}, {false, false}}, {VertexSet{0}, VertexSet{1}}, Rational(1, 2)};
    EXPECT_NE(layout_violation(po, anti, po.chi()), "");
}

TEST(AvgP5, CompleteBGivesDensePair) {
    Graph g = kite();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = avg_p5(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1), Rational(1, 2), 1);
    EXPECT_EQ(c.bullet, 1);
    EXPECT_EQ(c.set("X"), (VertexSet{1, 2}));
    EXPECT_EQ(c.set("Y"), VertexSet{3});
    expect_verified(g, c);
}

TEST(AvgP5, RangeError) {
    Graph g = kite();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    EXPECT_THROW(avg_p5(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1), Rational(3, 5), 1),
                 RangeError);
}

TEST(AvgP5, TwoAnticompleteComponents) {
    // v = 0; A = {1, 2}; B = {3, 4} U {5, 6}, two edges; 1 sees {3,4}, 2 sees {5,6}
    Graph g(7, {{0, 1}, {0, 2}, {3, 4}, {5, 6}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {1, 2}});
    ASSERT_FALSE(find_induced_p5(g));
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = avg_p5(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3, 4, 5, 6}, Rational(1), Rational(1, 4), 2);
    expect_verified(g, c);
}

TEST(DenseShrink, CompleteGivesFirstBullet) {
    Graph g = kite();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = dense_shrink(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1, 4), Rational(1, 4));
    EXPECT_EQ(c.bullet, 1);
    EXPECT_EQ(c.set("X"), (VertexSet{1, 2}));
    EXPECT_EQ(c.set("Y"), VertexSet{3});
    expect_verified(g, c);
}

TEST(DenseShrink, StrictRange) {
    Graph g = kite();
    Oracle o(g);
    Ctx ctx(o, Mode::strict);
    EXPECT_ANY_THROW(dense_shrink(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, pow2(-7), pow2(-7)));
}

TEST(DenseShrink, GreedyOrderIsDeterministic) {
    int runs = 0;
    for (std::uint64_t seed = 1; seed <= 40 && runs < 3; ++seed) {
        Graph g = random_p5free({Strategy::repair, 12, Rational(1, 2), seed});
        Oracle o(g);
        for (int v = 0; v < g.n(); ++v) {
            VertexSet a = g.nbrs(v), b = g.vertices() - g.closed_nbrs(v);
            if (a.empty() || b.empty() || !dense_to(o, b, a, Rational(1, 2)).dense) continue;
            Ctx c1(o, Mode::relaxed), c2(o, Mode::relaxed);
            auto x = dense_shrink(c1, g.vertices(), v, a, b, Rational(1, 4), Rational(1, 2));
            auto y = dense_shrink(c2, g.vertices(), v, a, b, Rational(1, 4), Rational(1, 2));
            EXPECT_EQ(to_json(x).dump(), to_json(y).dump());
            expect_verified(g, x);
            ++runs;
            break;
        }
    }
    EXPECT_GT(runs, 0);
}

TEST(DenseCombine, CompleteBPassesThrough) {
    Graph g = kite();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = dense_combine(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1, 2), Rational(1, 4),
                           Rational(1, 4));
    EXPECT_EQ(c.bullet, 1);
    expect_verified(g, c);
}

TEST(Incre1Step, K4IsAlreadyDenser) {
    Graph g = complete_graph(4);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = incre1_step(ctx, g.vertices(), Rational(1, 8), Rational(1, 4));
    EXPECT_EQ(c.bullet, 1);
    expect_verified(g, c);
}

TEST(Incre1Step, StrictGate) {
    Graph g = complete_graph(4);
    Oracle o(g);
    Ctx ctx(o, Mode::strict);
    EXPECT_ANY_THROW(incre1_step(ctx, g.vertices(), pow2(-9), pow2(-8)));
}

TEST(Round1, TwoTrianglesPurePair) {
    Graph g = two_triangles();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = round1(ctx, g.vertices(), Rational(1, 4), Rational(200));
    EXPECT_EQ(c.bullet, 1);
    EXPECT_EQ(c.blocks("B_").size(), 2u);
    expect_verified(g, c);
}

TEST(Round1, K6DensePartition) {
    Graph g = complete_graph(6);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = round1(ctx, g.vertices(), Rational(1, 4), Rational(200));
    EXPECT_EQ(c.bullet, 2);
    auto bs = blocks_of(c, "B_");
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) EXPECT_TRUE(dense_to(o, bs[i], bs[j], Rational(1, 4)).dense);
    expect_verified(g, c);
}

TEST(Round1, RangeError) {
    Graph g = complete_graph(6);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    EXPECT_THROW(round1(ctx, g.vertices(), Rational(3, 4), Rational(200)), RangeError);
}

TEST(Convert, EightChromaticInstances) {
    std::vector<Graph> gs = {complete_graph(8), complete_multipartite({2, 2, 2, 2, 2, 2, 2, 2}),
                             disjoint_union(complete_graph(8), complete_graph(3))};
    for (const auto& g : gs) {
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = convert_blockade(ctx, g.vertices(), Rational(1, 2), Rational(1));
        auto bs = blocks_of(c, "A_");
        EXPECT_GE(bs.size(), 2u);
        expect_verified(g, c);
    }
}

TEST(Convert, ChiBelowGate) {
    Graph g = complete_graph(4);
    Oracle o(g);
    Ctx ctx(o, Mode::strict);
    EXPECT_ANY_THROW(convert_blockade(ctx, g.vertices(), Rational(1, 2), Rational(1)));
}

TEST(Midway, AnticompleteAndDenseBranches) {
    {
        Graph g = two_triangles();
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = midway_blockade(ctx, g.vertices(), Rational(1, 2), Rational(6));
        EXPECT_EQ(c.bullet, 1);
        expect_verified(g, c);
    }
    {
        Graph g = complete_graph(8);
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = midway_blockade(ctx, g.vertices(), Rational(1, 2), Rational(6));
        EXPECT_EQ(c.bullet, 2);
        expect_verified(g, c);
    }
}

TEST(AnticompleteExtract, SingleBlock) {
    Graph g = kite();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = anticomplete_extract(ctx, g.vertices(), VertexSet{1, 2}, {VertexSet{3}}, Rational(1));
    EXPECT_EQ(c.bullet, 1);
    EXPECT_EQ(c.list("I"), std::vector<int>{1});
    EXPECT_EQ(c.set("Ap_1"), (VertexSet{1, 2}));
    expect_verified(g, c);
}

TEST(AnticompleteExtract, MixedOnTwoIsRejected) {
    // 0 is mixed on {1,2} and on {3,4}
    Graph g(5, {{1, 2}, {3, 4}, {0, 1}, {0, 3}});
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    EXPECT_THROW(anticomplete_extract(ctx, g.vertices(), VertexSet{0}, {VertexSet{1, 2}, VertexSet{3, 4}}, Rational(1)),
                 HypothesisError);
}

TEST(AveragedExtract, TwoBlocksOneTarget) {
    // A_1 = {0}, A_2 = {1}, B_1 = {2}; both complete to B_1
    Graph g(3, {{0, 2}, {1, 2}, {0, 1}});
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = averaged_extract(ctx, g.vertices(), {VertexSet{0}, VertexSet{1}}, {VertexSet{2}}, {Rational(1), Rational(1)});
    EXPECT_EQ(c.bullet, 1);
    EXPECT_EQ(c.param("i"), 1);
    EXPECT_EQ(c.list("I"), (std::vector<int>{1, 2}));
    expect_verified(g, c);
}

TEST(Anticonn, K12SixBlocks) {
    Graph g = complete_graph(12);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = anticonn_or_complete(ctx, g.vertices(), Rational(1, 8));
    auto bs = blocks_of(c, "B_");
    ASSERT_EQ(bs.size(), 6u);
    for (const auto& b : bs) EXPECT_EQ(o.chi(b), 2);
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) EXPECT_EQ(classify_pair(g, bs[i], bs[j]), PairKind::complete);
    expect_verified(g, c);
}

TEST(Anticonn, Errors) {
    Graph g = complete_graph(3);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    EXPECT_THROW(anticonn_or_complete(ctx, g.vertices(), Rational(1, 8)), HypothesisError);
    Graph k = complete_graph(12);
    Oracle ko(k);
    Ctx kctx(ko, Mode::relaxed);
    EXPECT_THROW(anticonn_or_complete(kctx, k.vertices(), Rational(1, 4)), RangeError);
}

TEST(Round2, K9CliqueEndgame) {
    Graph g = complete_graph(9);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = round2(ctx, g.vertices(), Rational(1, 16), Rational(112));
    auto bs = blocks_of(c, "B_");
    EXPECT_GE(bs.size(), 2u);
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) EXPECT_EQ(classify_pair(g, bs[i], bs[j]), PairKind::complete);
    expect_verified(g, c);
}

TEST(Round2, StrictGate) {
    Graph g = complete_graph(9);
    Oracle o(g);
    Ctx ctx(o, Mode::strict);
    EXPECT_ANY_THROW(round2(ctx, g.vertices(), pow2(-32), Rational(112)));
}

TEST(Main, TwoTrianglesAndAccounting) {
    Graph g = two_triangles();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = main_trichotomy(ctx, g.vertices(), Rational(160));
    expect_verified(g, c);
    auto acc = account(o, c);
    EXPECT_TRUE(acc.ok) << acc.branch;
}

TEST(Main, RandomInstancesVerify) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = random_p5free({Strategy::repair, 9, Rational(1, 2), seed});
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = main_trichotomy(ctx, g.vertices(), Rational(160));
        expect_verified(g, c);
        EXPECT_TRUE(account(o, c).ok) << "seed " << seed;
    }
}
