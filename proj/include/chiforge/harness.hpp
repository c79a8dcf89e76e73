#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chiforge/certificate.hpp"
#include "chiforge/generators.hpp"

namespace chiforge {

// An invocation is the JSON needed to re-run one lemma procedure:
//   {"lemma", "mode", "graph6", "sets": {"G": [...], "v": [...], ...},
//    "params": {"eps": "1/4", ...}}
// Set and parameter names match the certificate hypotheses.
Json make_invocation(const std::string& lemma, const Graph& g, Mode mode, const VertexSet& ground,
                     const std::vector<std::pair<std::string, VertexSet>>& sets,
                     const std::vector<std::pair<std::string, Rational>>& params);

// Runs the procedure named by the invocation; the returned certificate
// carries the invocation. Procedure errors propagate.
Certificate run_invocation(const Json& inv, int budget = default_budget());

// Ranges and structural hypotheses hold (gates are not considered).
bool admissible(const Json& inv, std::string* why = nullptr);

// Re-runs the certificate's invocation and compares serialised bytes.
bool replays(const Certificate& c, int budget = default_budget());

// Random admissible invocation for `lemma`, derived from `seed` alone.
std::optional<Json> sample_invocation(const std::string& lemma, std::uint64_t seed, Mode mode);

struct CampaignSpec {
    std::string lemma;
    int trials = 200;
    std::uint64_t seed = 1;
    Mode mode = Mode::relaxed;
    int workers = 1;
    bool timing = false;
    int budget = default_budget();
};

struct TrialRow {
    int id = 0;
    std::string graph6;
    std::string outcome;  // "<kind>#<bullet>", "waived", "reject", "error:<type>" or "no-instance"
    bool verified = false;
    long millis = 0;
    std::string detail;
    Json invocation;
    int structural_waivers = 0;
};

struct CampaignReport {
    std::string lemma;
    Mode mode = Mode::relaxed;
    int instances = 0, pass = 0, fail = 0, error = 0, waived = 0;
    int structural_waivers = 0;
    std::vector<TrialRow> rows;
    std::vector<std::string> counterexamples;  // graph6 of failing rows
};

CampaignReport run_campaign(const CampaignSpec& spec);
// CSV columns: instance_id, graph6, lemma, mode, outcome_tag, verified, millis
std::string report_csv(const CampaignReport& r);
Json report_summary(const CampaignReport& r);
// Writes <dir>/<lemma>_<id>.g6 and .json for each fail/error row; returns the
// written sidecar paths.
std::vector<std::string> save_counterexamples(const CampaignReport& r, const std::string& dir);

// χ as a measure: ∅ ↦ 0, singletons ↦ 1, monotone, subadditive, max on
// anticomplete unions, sum on complete unions, ω <= χ.
struct AxiomReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
// `constructed` disjoint-union and join pairs plus `sampled` random
// overlapping pairs.
AxiomReport verify_measure_axioms(std::uint64_t seed, int constructed, int sampled);

struct ScanRow {
    std::string graph6;
    int n = 0, omega = 0, chi = 0;
    double exponent = 0;  // log χ / log ω, ω >= 2
};
struct ScanReport {
    std::vector<ScanRow> rows;
    double max_exponent = 0;
    std::string max_graph6;
};
// Random P5-free instances with ω >= 2, seeded; C5 is always row 0.
ScanReport extremal_scan(std::uint64_t seed, int trials, int workers = 1);
std::string scan_csv(const ScanReport& r);

// Connected anticomplete pairs in random P5-free graphs; counts vertices
// mixed on both sides (zero for P5-free input).
struct MixedReport {
    int pairs = 0;
    int mixed = 0;
    std::vector<std::string> witnesses;
};
MixedReport mixed_campaign(std::uint64_t seed, int pairs);

}  // namespace chiforge
