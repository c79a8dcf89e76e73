#include <gtest/gtest.h>

#include "chiforge/generators.hpp"
#include "chiforge/structure.hpp"

using namespace chiforge;

namespace {

Graph two_triangles() { return disjoint_union(complete_graph(3), complete_graph(3)); }

void expect_verified(const Graph& g, const Certificate& c) {
    auto v = verify_certificate(g, c);
    EXPECT_TRUE(v.accepted()) << c.lemma << " bullet " << c.bullet << ": " << v.reason;
    // the serialised form verifies too
    EXPECT_TRUE(verify_certificate(g, to_json(c)).accepted());
}

bool trace_has(const Certificate& c, const std::string& step) {
    for (const auto& e : c.trace)
        if (e["step"] == step) return true;
    return false;
}

}  // namespace

TEST(Gyarfas, C5IsTight) {
    Graph g = cycle_graph(5);
    Oracle o(g);
    // every vertex of C5 has chi(N(v)) = 1 = chi(G)/3
    for (int v = 0; v < 5; ++v) EXPECT_EQ(o.chi(g.nbrs(v)), 1);
    auto w = gyarfas_vertex(o, g.vertices());
    EXPECT_EQ(w.v, 0);
    EXPECT_EQ(w.chiN, 1);
    EXPECT_EQ(w.chiG, 3);
}

TEST(Gyarfas, CompleteAndEdge) {
    Oracle k4(complete_graph(4));
    auto w = gyarfas_vertex(k4, k4.graph().vertices());
    EXPECT_EQ(w.v, 0);
    EXPECT_EQ(w.chiN, 3);
    Oracle e(complete_graph(2));
    EXPECT_EQ(gyarfas_vertex(e, e.graph().vertices()).chiN, 1);
}

TEST(Gyarfas, Errors) {
    Oracle o(edgeless_graph(3));
    EXPECT_THROW(gyarfas_vertex(o, o.graph().vertices()), HypothesisError);
    // C7 contains P5 and some vertex scan fails only on graphs with P5; a
    // long cycle still has chi(N) = 1 >= 3/3 so it succeeds.
    Oracle c7(cycle_graph(7));
    EXPECT_NO_THROW(gyarfas_vertex(c7, c7.graph().vertices()));
}

TEST(Gyarfas, Certificate) {
    Graph g = cycle_graph(5);
    Oracle o(g);
    Ctx ctx(o, Mode::strict);
    auto c = gyarfas_certificate(ctx, g.vertices());
    EXPECT_EQ(c.cls, 'A');
    EXPECT_EQ(c.set("v"), VertexSet{0});
    expect_verified(g, c);
}

TEST(Bip, PureCompletePair) {
    // v=0 joined to the edge a1=1, a2=2; b1=3 complete to {1,2}
    Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = bip_trichotomy(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1, 4));
    EXPECT_EQ(c.bullet, 1);
    EXPECT_EQ(c.set("X"), (VertexSet{1, 2}));
    EXPECT_EQ(c.set("Y"), VertexSet{3});
    expect_verified(g, c);
}

TEST(Bip, CliqueAgainstCliqueHasCEqualA) {
    // v=0; A={1,2,3} clique; B={4,5} clique complete to A
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}};
    for (int a : {1, 2, 3})
        for (int b : {4, 5}) edges.emplace_back(a, b);
    Graph g(6, edges);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = bip_trichotomy(ctx, g.vertices(), 0, VertexSet{1, 2, 3}, VertexSet{4, 5}, Rational(1, 4));
    expect_verified(g, c);
    bool saw = false;
    for (const auto& e : c.trace)
        if (e["step"] == "bip split") {
            EXPECT_EQ(e["C"], Json::array({1, 2, 3}));
            saw = true;
        }
    EXPECT_TRUE(saw);
}

TEST(Bip, DenseToViolationNamesVertex) {
    // B={3} has no neighbour in A={1,2}: chi(A \ N(3)) = 1 is not < chi(A)/4
    Graph g(4, {{0, 1}, {0, 2}});
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    try {
        bip_trichotomy(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1, 4));
        FAIL() << "expected HypothesisError";
    } catch (const HypothesisError& e) {
        EXPECT_NE(std::string(e.what()).find("vertex 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(bip_trichotomy(ctx, g.vertices(), 0, VertexSet{1, 2}, VertexSet{3}, Rational(1, 3)), RangeError);
}

TEST(PureOrDense, Examples) {
    Rational eps(1, 2), delta(1, 512);
    {
        Graph g = complete_graph(4);
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = pure_or_dense(ctx, g.vertices(), eps, delta);
        EXPECT_EQ(c.bullet, 2);
        EXPECT_EQ(c.set("F"), g.vertices());
        expect_verified(g, c);
    }
    {
        Graph g = two_triangles();
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = pure_or_dense(ctx, g.vertices(), eps, delta);
        EXPECT_EQ(c.bullet, 1);
        EXPECT_TRUE(is_anticomplete_to(g, c.set("X"), c.set("Y")));
        expect_verified(g, c);
    }
    {
        Graph g(1);
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = pure_or_dense(ctx, g.vertices(), eps, delta);
        EXPECT_EQ(c.bullet, 2);
        EXPECT_EQ(c.set("F"), g.vertices());
        expect_verified(g, c);
    }
    Graph g = complete_graph(3);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    EXPECT_THROW(pure_or_dense(ctx, g.vertices(), eps, Rational(1, 511)), RangeError);
}

TEST(Rodl, Examples) {
    EXPECT_EQ(rodl_delta(Rational(1, 2)), Rational(1, 512));
    {
        Graph g = two_triangles();
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = rodl_chi(ctx, g.vertices(), Rational(1, 2));
        EXPECT_EQ(c.bullet, 1);
        expect_verified(g, c);
    }
    Graph g = complete_graph(8);
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto c = rodl_chi(ctx, g.vertices(), Rational(1, 2));
    EXPECT_EQ(c.bullet, 2);
    expect_verified(g, c);
}

TEST(SparsePair, TwoTrianglesAndPath) {
    Graph g = two_triangles();
    Oracle o(g);
    auto sp = sparse_pair(o, g.vertices(), 1);
    ASSERT_TRUE(sp);
    EXPECT_EQ(o.chi(sp->a) + o.chi(sp->b), 6);
    Graph p4 = path_graph(4);
    Oracle op(p4);
    auto s2 = sparse_pair(op, p4.vertices(), 1);
    ASSERT_TRUE(s2);
    EXPECT_TRUE(is_anticomplete_to(p4, s2->a, s2->b));
    EXPECT_EQ(op.chi(s2->a) + op.chi(s2->b), 3);
    Oracle ok(complete_graph(4));
    EXPECT_FALSE(sparse_pair(ok, ok.graph().vertices(), 1));
}

TEST(Decompose, Examples) {
    {
        Graph g = two_triangles();
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto c = decompose_anti(ctx, g.vertices(), Rational(1, 4), 1, Rational(14, 5));
        EXPECT_EQ(c.bullet, 1);
        EXPECT_EQ(o.chi(c.set("A")), 3);
        EXPECT_EQ(o.chi(c.set("B")), 3);
        expect_verified(g, c);
    }
    {
        Graph g = path_graph(4);
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        Rational eps(1, 4);
        auto c = decompose_anti(ctx, g.vertices(), eps, 1, (1 - eps * eps) * 2);
        expect_verified(g, c);
    }
    Graph g = two_triangles();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    EXPECT_THROW(decompose_anti(ctx, g.vertices(), Rational(3, 10), 1, 2), RangeError);
    Graph k4 = complete_graph(4);
    Oracle ok(k4);
    Ctx ck(ok, Mode::relaxed);
    try {
        decompose_anti(ck, k4.vertices(), Rational(1, 4), 1, 2);
        FAIL() << "expected SparsityError";
    } catch (const SparsityError& e) {
        EXPECT_EQ(e.f, k4.vertices());
    }
}

TEST(Phi, Values) {
    Rational c = pow2(-9);
    EXPECT_EQ(phi_eval(c, 0, 0), 1);
    EXPECT_EQ(phi_eval(Rational(1, 2), 0, 1), Rational(15, 16));
    for (int s = 0; s <= 4; ++s)
        for (int r = 0; r <= s; ++r) {
            EXPECT_GE(phi_eval(c, r, s), 1 - 2 * pow(c, 1L << (r + 2)));
            EXPECT_EQ(phi_eval(c, r, s), phi_eval(c, 0, s) / phi_eval(c, 0, r));
            EXPECT_EQ(phi_eval(c, r, r), 1);
            if (s > 0) EXPECT_LT(phi_eval(c, 0, s), phi_eval(c, 0, s - 1));
        }
    EXPECT_THROW(phi_eval(c, 2, 1), RangeError);
}

TEST(Grow, Examples) {
    Rational c = pow2(-9);
    {
        Graph g = complete_graph(4);
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto cert = grow_anticomplete(ctx, g.vertices(), c, 0);
        EXPECT_EQ(cert.bullet, 4);
        EXPECT_EQ(cert.set("F"), g.vertices());
        expect_verified(g, cert);
    }
    {
        Graph g = two_triangles();
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto cert = grow_anticomplete(ctx, g.vertices(), c, 0);
        EXPECT_EQ(cert.bullet, 1);
        expect_verified(g, cert);
    }
    Graph g = two_triangles();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto cert = grow_anticomplete(ctx, g.vertices(), c, 1);
    expect_verified(g, cert);
    bool nested = false;
    for (const auto& e : cert.trace)
        if (e["step"] == "enter" && e["lemma"] == "grow_anticomplete" && e["depth"] == 1) nested = true;
    EXPECT_TRUE(nested);
    EXPECT_THROW(grow_anticomplete(ctx, g.vertices(), Rational(1, 4), 0), RangeError);
}

TEST(AntiOrDense, Examples) {
    Rational c = pow2(-9);
    Graph k4 = complete_graph(4);
    {
        Oracle o(k4);
        Ctx ctx(o, Mode::strict);
        EXPECT_THROW(anti_or_dense(ctx, k4.vertices(), 5, c), GateError);
    }
    {
        Oracle o(k4);
        Ctx ctx(o, Mode::relaxed);
        auto cert = anti_or_dense(ctx, k4.vertices(), 5, c);
        EXPECT_EQ(cert.bullet, 1);
        EXPECT_EQ(cert.cls, 'C');
        EXPECT_TRUE(trace_has(cert, "waive"));
        expect_verified(k4, cert);
    }
    Graph g = two_triangles();
    Oracle o(g);
    Ctx ctx(o, Mode::relaxed);
    auto cert = anti_or_dense(ctx, g.vertices(), 5, c);
    expect_verified(g, cert);
    bool on_component = false;
    for (const auto& e : cert.trace)
        if (e["step"] == "level") on_component = e["component"] == Json::array({0, 1, 2});
    EXPECT_TRUE(on_component);
}

TEST(MixedInvariant, RandomP5FreeGraphs) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenSpec s;
        s.n = 10;
        s.seed = seed;
        Graph g = random_p5free(s);
        Oracle o(g);
        auto sp = sparse_pair(o, g.vertices(), 1);
        if (!sp) continue;
        EXPECT_FALSE(mixed_on_both(g, sp->a, sp->b).has_value()) << to_graph6(g);
    }
}

TEST(Procedures, RandomInstancesVerify) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        GenSpec s;
        s.n = 9;
        s.seed = seed;
        Graph g = random_p5free(s);
        Oracle o(g);
        Ctx ctx(o, Mode::relaxed);
        auto v = g.vertices();
        expect_verified(g, pure_or_dense(ctx, v, Rational(1, 2), Rational(1, 512)));
        expect_verified(g, rodl_chi(ctx, v, Rational(1, 2)));
        expect_verified(g, grow_anticomplete(ctx, v, pow2(-9), 1));
        expect_verified(g, anti_or_dense(ctx, v, 5, pow2(-9)));
    }
}
