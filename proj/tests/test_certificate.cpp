#include <gtest/gtest.h>

#include "chiforge/harness.hpp"
#include "chiforge/increment.hpp"

using namespace chiforge;

namespace {

const char* kTwoK3 = "EwCW";

Certificate run(const std::string& lemma, const Graph& g, std::vector<std::pair<std::string, Rational>> ps) {
    return run_invocation(make_invocation(lemma, g, Mode::relaxed, g.vertices(), {}, ps));
}

bool mentions(const Verdict& v, const std::string& s) { return v.reason.find(s) != std::string::npos; }

}  // namespace

TEST(Verifier, PurePairOnTwoTriangles) {
    Graph g = from_graph6(kTwoK3);
    Certificate c = run("pure_or_dense", g, {{"eps", Rational(1, 2)}, {"delta", Rational(1, 512)}});
    EXPECT_EQ(c.kind, "pure_pair");
    EXPECT_TRUE(verify_certificate(g, c).accepted());
    EXPECT_TRUE(verify_certificate(g, to_json(c)).accepted());
}

TEST(Verifier, InflatedChiThreshold) {
    Graph g = from_graph6(kTwoK3);
    Certificate c = run("pure_or_dense", g, {{"eps", Rational(1, 2)}, {"delta", Rational(1, 512)}});
    ASSERT_FALSE(c.claims.empty());
    ASSERT_EQ(c.claims[0].term, "chi(X)");
    c.claims[0].rhs = Rational(7, 2);
    Verdict v = verify_certificate(g, c);
    EXPECT_FALSE(v.accepted());
    EXPECT_TRUE(mentions(v, "chi inequality")) << v.reason;
}

TEST(Verifier, DensityViolatorNamed) {
    Graph g = complete_graph(6);
    Certificate c = run("round1", g, {{"x", Rational(1, 4)}, {"a", Rational(4)}});
    ASSERT_TRUE(verify_certificate(g, c).accepted());
    bool found = false;
    for (const auto& m : plant_faults(c, g.n(), 40))
        if (m.name == "zero_density") {
            found = true;
            Verdict v = verify_certificate(g, m.cert);
            EXPECT_FALSE(v.accepted());
            EXPECT_TRUE(mentions(v, "violated by")) << v.reason;
        }
    EXPECT_TRUE(found);
}

TEST(Verifier, WrongGraphAndStructuralWaiver) {
    Graph g = from_graph6(kTwoK3);
    Certificate c = run("pure_or_dense", g, {{"eps", Rational(1, 2)}, {"delta", Rational(1, 512)}});
    EXPECT_FALSE(verify_certificate(complete_graph(6), c).accepted());
    Certificate w = c;
    w.waivers.push_back("hypothesis: anticomplete");
    Verdict v = verify_certificate(g, w);
    EXPECT_FALSE(v.accepted());
    EXPECT_TRUE(mentions(v, "structural")) << v.reason;
}

TEST(Verifier, BudgetReportedSeparately) {
    Graph g = from_graph6(kTwoK3);
    Certificate c = run("pure_or_dense", g, {{"eps", Rational(1, 2)}, {"delta", Rational(1, 512)}});
    Verdict v = verify_certificate(g, c, 2);
    EXPECT_EQ(v.status, Verdict::Status::budget);
}

TEST(Verifier, JsonRoundTrip) {
    Graph g = complete_graph(6);
    Certificate c = run("round1", g, {{"x", Rational(1, 4)}, {"a", Rational(4)}});
    Json j = to_json(c);
    EXPECT_EQ(to_json(certificate_from_json(j)).dump(), j.dump());
    for (const auto& cl : j["claims"]) EXPECT_NE(cl["rhs"].get<std::string>().find('/'), std::string::npos);
}

TEST(PlantedFaults, TenPerKindAllRejected) {
    for (const auto& lemma : lemma_ids()) {
        auto inv = sample_invocation(lemma, 17, Mode::relaxed);
        ASSERT_TRUE(inv.has_value()) << lemma;
        Certificate c = run_invocation(*inv);
        Graph g = from_graph6(c.graph6);
        ASSERT_TRUE(verify_certificate(g, c).accepted()) << lemma;
        auto ms = plant_faults(c, g.n(), 10);
        EXPECT_EQ(ms.size(), 10u) << lemma;
        for (const auto& m : ms) EXPECT_FALSE(verify_certificate(g, m.cert).accepted()) << lemma << " " << m.name;
    }
}

TEST(Registry, TwentyLemmas) {
    EXPECT_EQ(lemma_ids().size(), 20u);
    for (const auto& l : lemma_ids()) EXPECT_TRUE(known_lemma(l));
    EXPECT_FALSE(known_lemma("no_such_lemma"));
    EXPECT_EQ(lemma_class("gyarfas_vertex"), 'A');
}
