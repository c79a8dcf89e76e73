#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "chiforge/harness.hpp"

using namespace chiforge;

namespace {

CampaignSpec spec(const std::string& lemma, int trials, Mode mode = Mode::relaxed, int workers = 1) {
    CampaignSpec s;
    s.lemma = lemma;
    s.trials = trials;
    s.seed = 7;
    s.mode = mode;
    s.workers = workers;
    return s;
}

}  // namespace

TEST(Campaign, TalliesAddUp) {
    CampaignReport r = run_campaign(spec("gyarfas_vertex", 60));
    EXPECT_EQ(r.instances, 60);
    EXPECT_EQ(r.pass + r.fail + r.error + r.waived, r.instances);
    EXPECT_EQ(r.pass, 60);
    EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Campaign, StrictAntiOrDenseNeverFails) {
    CampaignReport r = run_campaign(spec("anti_or_dense", 40, Mode::strict));
    EXPECT_EQ(r.fail, 0);
    EXPECT_EQ(r.waived + r.error, r.instances);
}

TEST(Campaign, ByteDeterministicAcrossWorkerCounts) {
    for (const char* lemma : {"round1", "midway_blockade", "main_trichotomy"}) {
        std::string a = report_csv(run_campaign(spec(lemma, 30, Mode::relaxed, 1)));
        std::string b = report_csv(run_campaign(spec(lemma, 30, Mode::relaxed, 4)));
        EXPECT_EQ(a, b) << lemma;
    }
}

TEST(Campaign, CsvColumns) {
    std::string csv = report_csv(run_campaign(spec("bip_trichotomy", 3)));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "instance_id,graph6,lemma,mode,outcome_tag,verified,millis");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(Campaign, CounterexampleSidecars) {
    CampaignReport r;
    r.lemma = "round1";
    TrialRow row;
    row.id = 3;
    row.graph6 = to_graph6(complete_graph(6));
    row.outcome = "error:no-outcome";
    row.invocation = make_invocation("round1", complete_graph(6), Mode::relaxed, complete_graph(6).vertices(), {},
                                     {{"x", Rational(1, 4)}, {"a", Rational(4)}});
    r.rows.push_back(row);
    auto dir = std::filesystem::temp_directory_path() / "chiforge_cx";
    std::filesystem::remove_all(dir);
    auto paths = save_counterexamples(r, dir.string());
    ASSERT_EQ(paths.size(), 1u);
    std::ifstream f(paths[0]);
    Json side = Json::parse(f);
    EXPECT_TRUE(std::filesystem::exists(dir / "round1_3.g6"));
    Certificate c = run_invocation(side["invocation"]);
    EXPECT_TRUE(verify_certificate(complete_graph(6), c).accepted());
    std::filesystem::remove_all(dir);
}

TEST(Replay, CertificatesReplayByteIdentical) {
    for (const auto& lemma : lemma_ids()) {
        auto inv = sample_invocation(lemma, 99, Mode::relaxed);
        ASSERT_TRUE(inv.has_value()) << lemma;
        EXPECT_TRUE(replays(run_invocation(*inv))) << lemma;
    }
}

TEST(Sampler, AdmissibleAndSeeded) {
    for (const auto& lemma : lemma_ids()) {
        auto a = sample_invocation(lemma, 5, Mode::relaxed), b = sample_invocation(lemma, 5, Mode::relaxed);
        ASSERT_TRUE(a && b) << lemma;
        EXPECT_EQ(a->dump(), b->dump());
        std::string why;
        EXPECT_TRUE(admissible(*a, &why)) << lemma << ": " << why;
    }
}

TEST(Measure, UnionAndJoin) {
    Graph u = disjoint_union(complete_graph(3), complete_graph(2));
    Graph j = join(complete_graph(3), complete_graph(2));
    EXPECT_EQ(Oracle(u).chi(), 3);
    EXPECT_EQ(Oracle(j).chi(), 5);
    AxiomReport r = verify_measure_axioms(3, 50, 100);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.checks, 150);
}

TEST(Scan, KnownRows) {
    ScanReport r = extremal_scan(11, 40, 2);
    ASSERT_EQ(r.rows.size(), 40u);
    EXPECT_EQ(r.rows[0].graph6, to_graph6(cycle_graph(5)));
    EXPECT_EQ(r.rows[0].chi, 3);
    EXPECT_EQ(r.rows[0].omega, 2);
    EXPECT_DOUBLE_EQ(r.rows[0].exponent, std::log(3.0) / std::log(2.0));
    for (const auto& row : r.rows) EXPECT_GE(row.omega, 2);
    Oracle oct(complete_multipartite({2, 2, 2}));
    EXPECT_EQ(oct.chi(), 3);
    EXPECT_EQ(oct.omega(oct.graph().vertices()), 3);
    EXPECT_EQ(scan_csv(r).substr(0, 28), "graph6,n,omega,chi,exponent\n");
}

TEST(Mixed, NoneOnP5Free) {
    MixedReport r = mixed_campaign(21, 100);
    EXPECT_EQ(r.pairs, 100);
    EXPECT_EQ(r.mixed, 0);
}
