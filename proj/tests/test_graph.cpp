#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chiforge/graph.hpp"
#include "oracle_reference.hpp"

using namespace chiforge;

namespace {

// Reference encodings produced by an independent graph6 implementation.
constexpr const char* kC5 = "Dhc";
constexpr const char* kC6 = "EhEG";
constexpr const char* kP5 = "DhC";
constexpr const char* kPetersen = "IheA@GUAo";
constexpr const char* kK4 = "C~";
constexpr const char* kK222 = "E]~o";
constexpr const char* kK33 = "EFz_";
constexpr const char* k2K3 = "EwCW";

Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(i, j);
    return Graph(n, es);
}


}  // namespace

TEST(Graph6, EdgelessFive) {
    Graph g = from_graph6("D??");
    EXPECT_EQ(g.n(), 5);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph6, MatchesReferenceEncodings) {
    EXPECT_EQ(to_graph6(cycle(5)), kC5);
    EXPECT_EQ(to_graph6(cycle(6)), kC6);
    EXPECT_EQ(to_graph6(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), kK4);
    EXPECT_EQ(from_graph6(kPetersen).edge_count(), 15);
    for (const char* s : {kC5, kC6, kP5, kPetersen, kK4, kK222, kK33, k2K3, "D??", "?", "@"})
        EXPECT_EQ(to_graph6(from_graph6(s)), s);
}

TEST(Graph6, LongHeaderRoundTrip) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < 70; ++i) es.emplace_back(i, i + 1);
    Graph p70(70, es);
    std::string s = to_graph6(p70);
    EXPECT_EQ(s.substr(0, 4), "~?@E");
    EXPECT_EQ(from_graph6(s), p70);
}

TEST(Graph6, RandomRoundTrip) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 21), 0.4);
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, RejectsMalformed) {
    EXPECT_THROW(from_graph6(""), GraphError);
    EXPECT_THROW(from_graph6("D?"), GraphError);     // too short
    EXPECT_THROW(from_graph6("D???"), GraphError);   // too long
    EXPECT_THROW(from_graph6("Bx"), GraphError);     // 3 vertices: padding bits set
    EXPECT_THROW(from_graph6("D\x01?"), GraphError); // byte out of range
}

TEST(AdjacencyText, RoundTrip) {
    Graph g = from_graph6(kPetersen);
    EXPECT_EQ(from_adjacency_text(to_adjacency_text(g)), g);
    EXPECT_EQ(to_adjacency_text(Graph(3, {{0, 2}})), "3 1\n0 2\n");
    EXPECT_THROW(from_adjacency_text("3 2\n0 1\n"), GraphError);
}

TEST(Induced, Basics) {
    Graph c5 = cycle(5);
    EXPECT_EQ(induced(c5, c5.vertices()), c5);
    Graph p3 = induced(c5, {0, 1, 2});
    EXPECT_EQ(p3, Graph(3, {{0, 1}, {1, 2}}));
    Graph oct = from_graph6(kK222);
    EXPECT_EQ(induced(oct, {0, 1}), Graph(2));
    EXPECT_THROW(induced(c5, {7}), GraphError);
}

TEST(Components, Modes) {
    Graph two = from_graph6(k2K3);
    auto cc = components(two, two.vertices(), ComponentMode::connected);
    ASSERT_EQ(cc.size(), 2u);
    EXPECT_EQ(cc[0], VertexSet({0, 1, 2}));
    EXPECT_EQ(cc[1], VertexSet({3, 4, 5}));

    Graph k33 = from_graph6(kK33);
    auto ac = components(k33, k33.vertices(), ComponentMode::anticonnected);
    ASSERT_EQ(ac.size(), 2u);
    EXPECT_EQ(ac[0], VertexSet({0, 1, 2}));
    EXPECT_EQ(ac[1], VertexSet({3, 4, 5}));

    Graph k1(1);
    auto one = components(k1, {0}, ComponentMode::anticonnected);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], VertexSet({0}));
    EXPECT_TRUE(components(k1, {}, ComponentMode::connected).empty());
}

TEST(Components, PartitionRandom) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 12, 0.3);
        VertexSet s;
        for (int v = 0; v < 12; ++v)
            if (rng() & 1) s.insert(v);
        for (auto mode : {ComponentMode::connected, ComponentMode::anticonnected}) {
            VertexSet un;
            int prev = -1;
            for (const auto& c : components(g, s, mode)) {
                EXPECT_FALSE(c.intersects(un));
                EXPECT_GT(c.first(), prev);
                prev = c.first();
                un |= c;
            }
            EXPECT_EQ(un, s);
        }
    }
}

TEST(ClassifyPair, Definitions) {
    Graph c5 = cycle(5);
    EXPECT_EQ(classify_pair(c5, {0}, {2}), PairKind::anticomplete);
    Graph k4 = from_graph6(kK4);
    EXPECT_EQ(classify_pair(k4, {0}, {1, 2}), PairKind::complete);
    EXPECT_EQ(classify_pair(c5, {0}, {1, 2}), PairKind::mixed);
    EXPECT_THROW(classify_pair(c5, {0}, {}), GraphError);
    EXPECT_THROW(classify_pair(c5, {0, 1}, {1}), GraphError);

    Graph p3(3, {{0, 1}, {1, 2}});  // a-b-c
    EXPECT_EQ(mixed_on(Graph(3, {{0, 1}}), 0, {1, 2}), Mixed::mixed);
    EXPECT_EQ(mixed_on(p3, 1, {0, 2}), Mixed::pure_complete);
    EXPECT_EQ(mixed_on(p3, 0, {2}), Mixed::pure_anticomplete);
    EXPECT_THROW(mixed_on(p3, 0, {0, 1}), GraphError);
}

TEST(ClassifyPair, Symmetric) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(rng, 8, 0.5);
        VertexSet a, b;
        for (int v = 0; v < 8; ++v) {
            int r = rng() % 3;
            if (r == 0) a.insert(v);
            if (r == 1) b.insert(v);
        }
        if (a.empty() || b.empty()) continue;
        EXPECT_EQ(classify_pair(g, a, b), classify_pair(g, b, a));
    }
}

TEST(FindP5, Fixtures) {
    EXPECT_FALSE(find_induced_p5(cycle(5)).has_value());
    auto c6 = find_induced_p5(cycle(6));
    ASSERT_TRUE(c6.has_value());
    EXPECT_EQ(*c6, (std::array<int, 5>{0, 1, 2, 3, 4}));
    auto p5 = find_induced_p5(from_graph6(kP5));
    ASSERT_TRUE(p5.has_value());
    EXPECT_EQ(*p5, (std::array<int, 5>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(find_induced_p5(from_graph6(kPetersen)).has_value());
}

TEST(FindP5, AgreesWithNaiveScan) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 300; ++t) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(rng, n, 0.2 + 0.1 * (t % 5));
        EXPECT_EQ(find_induced_p5(g), ref::naive_p5(g)) << to_graph6(g);
    }
}

TEST(VertexSetOps, Ordering) {
    EXPECT_TRUE(least_index_less({1, 5}, {2}));
    EXPECT_TRUE(least_index_less({1, 2}, {1, 3}));
    EXPECT_TRUE(least_index_less({1}, {1, 3}));
    EXPECT_FALSE(least_index_less({1, 3}, {1, 3}));
    VertexSet big = VertexSet::range(200);
    EXPECT_EQ(big.size(), 200);
    EXPECT_EQ(big.last(), 199);
    EXPECT_EQ((big - VertexSet::range(130)).first(), 130);
}
