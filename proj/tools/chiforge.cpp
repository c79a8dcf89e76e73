// chiforge command-line entry point. Exit codes: 0 success/accept,
// 1 reject/fail, 2 usage error. Results go to stdout (JSON or CSV),
// diagnostics to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chiforge/harness.hpp"
#include "chiforge/increment.hpp"

using namespace chiforge;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::uint64_t seed = 1;
    std::string mode = "relaxed";
    int budget = 0;  // 0: CHIFORGE_SOLVE_BUDGET or the built-in default
    int workers = 1;
    std::string out;

    int solve_budget() const { return budget > 0 ? budget : default_budget(); }
    Mode parsed_mode() const {
        try {
            return parse_mode(mode);
        } catch (const std::invalid_argument& e) {
            throw Usage(e.what());
        }
    }
};

struct Input {
    std::string path;
    std::string graph6;
};

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_text(const std::string& path) {
    if (path.empty() || path == "-") return slurp(std::cin);
    std::ifstream f(path);
    if (!f) throw Usage("cannot read " + path);
    return slurp(f);
}

// One graph per non-empty line; a leading ">>graph6<<" header is accepted.
std::vector<Graph> read_graphs(const Input& in) {
    std::string text = in.graph6.empty() ? read_text(in.path) : in.graph6;
    std::vector<Graph> gs;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        try {
            gs.push_back(from_graph6(line));
        } catch (const GraphError& e) {
            throw Usage(std::string("bad graph6: ") + e.what());
        }
    }
    if (gs.empty()) throw Usage("no graph6 input");
    return gs;
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw Usage(std::string("bad JSON: ") + e.what());
    }
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Usage("cannot write " + path);
        }
    }
    std::ostream& operator*() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void add_input(CLI::App* cmd, Input& in) {
    auto* p = cmd->add_option("input", in.path, "graph6 file ('-' or omitted: stdin)");
    auto* g = cmd->add_option("--graph6,-g", in.graph6, "inline graph6 string");
    p->excludes(g);
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    for (std::string tok; std::getline(is, tok, ',');) {
        if (tok.empty()) continue;
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Usage("not an integer: " + tok);
        }
    }
    return v;
}

std::pair<std::string, std::string> split_kv(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Usage("expected NAME=VALUE, got " + s);
    return {s.substr(0, eq), s.substr(eq + 1)};
}

// --- subcommands ---------------------------------------------------------------------

int cmd_gen(const Common& co, const std::string& family, const std::string& params, int n, const std::string& p,
            const std::string& strategy, int count) {
    if (count < 1) throw Usage("--count must be positive");
    Output out(co.out);
    for (int i = 0; i < count; ++i) {
        GenSpec s;
        s.seed = co.seed + static_cast<std::uint64_t>(i);
        if (!family.empty()) {
            s.strategy = Strategy::family;
            s.family = family;
            s.params = parse_ints(params);
        } else {
            if (n < 1) throw Usage("--n or --family is required");
            s.n = n;
            try {
                s.p = parse_rational(p);
            } catch (const std::exception&) {
                throw Usage("bad --p " + p);
            }
            if (strategy == "rejection") s.strategy = Strategy::rejection;
            else if (strategy == "repair") s.strategy = Strategy::repair;
            else throw Usage("--strategy must be rejection or repair");
        }
        try {
            *out << to_graph6(random_p5free(s)) << '\n';
        } catch (const GenError& e) {
            std::cerr << "gen: " << e.what() << '\n';
            return kFail;
        } catch (const std::invalid_argument& e) {
            throw Usage(e.what());
        }
    }
    return kOk;
}

int cmd_value(const Common& co, const Input& in, const std::string& what) {
    Output out(co.out);
    for (const Graph& g : read_graphs(in)) {
        Oracle o(g, co.solve_budget());
        Json j{{"graph6", to_graph6(g)}};
        if (what == "chi") {
            Coloring c = o.chi_witness(g.vertices());
            j["chi"] = c.k;
            j["coloring"] = c.color;
        } else {
            auto w = o.extremal(g.vertices(), what == "omega" ? ExtremalKind::clique : ExtremalKind::stable);
            j[what] = w.size();
            j[what == "omega" ? "clique" : "stable_set"] = w.members.to_vector();
        }
        *out << j.dump() << '\n';
    }
    return kOk;
}

int cmd_p5check(const Common& co, const Input& in) {
    Output out(co.out);
    bool all_free = true;
    for (const Graph& g : read_graphs(in)) {
        auto w = find_induced_p5(g);
        Json j{{"graph6", to_graph6(g)}, {"p5_free", !w}};
        if (w) {
            j["witness"] = std::vector<int>(w->begin(), w->end());
            all_free = false;
        }
        *out << j.dump() << '\n';
    }
    return all_free ? kOk : kFail;
}

int cmd_lemma(const Common& co, const Input& in, const std::string& id, const std::vector<std::string>& sets,
              const std::vector<std::string>& params) {
    if (!known_lemma(id)) throw Usage("unknown lemma " + id);
    auto gs = read_graphs(in);
    if (gs.size() != 1) throw Usage("lemma takes exactly one graph");
    const Graph& g = gs[0];
    VertexSet ground = g.vertices();
    std::vector<std::pair<std::string, VertexSet>> named;
    for (const auto& s : sets) {
        auto [k, v] = split_kv(s);
        auto vs = parse_ints(v);
        for (int x : vs)
            if (x < 0 || x >= g.n()) throw Usage("vertex " + std::to_string(x) + " out of range in " + k);
        if (k == "G") ground = VertexSet::from_vector(vs);
        else named.emplace_back(k, VertexSet::from_vector(vs));
    }
    std::vector<std::pair<std::string, Rational>> ps;
    for (const auto& p : params) {
        auto [k, v] = split_kv(p);
        try {
            ps.emplace_back(k, parse_rational(v));
        } catch (const std::exception&) {
            throw Usage("bad rational for " + k + ": " + v);
        }
    }
    Json inv = make_invocation(id, g, co.parsed_mode(), ground, named, ps);
    Certificate c;
    try {
        c = run_invocation(inv, co.solve_budget());
    } catch (const RangeError& e) {
        throw Usage(e.what());
    } catch (const std::exception& e) {
        std::cerr << id << ": " << e.what() << '\n';
        return kFail;
    }
    Verdict v = verify_certificate(g, c, co.solve_budget());
    Json j = to_json(c);
    Output out(co.out);
    *out << j.dump(2) << '\n';
    if (!v.accepted()) std::cerr << "verifier: " << v.reason << '\n';
    return v.accepted() ? kOk : kFail;
}

int report_verdict(const Verdict& v, const std::string& out_path) {
    const char* s = v.status == Verdict::Status::accept ? "accept" : v.status == Verdict::Status::reject ? "reject" : "budget";
    Output out(out_path);
    *out << Json{{"verdict", s}, {"reason", v.reason}}.dump() << '\n';
    return v.accepted() ? kOk : kFail;
}

int cmd_verify(const Common& co, const std::string& path) {
    Json j = read_json(path);
    if (!j.is_object() || !j.contains("graph6")) throw Usage("certificate JSON needs a graph6 field");
    Graph g;
    try {
        g = from_graph6(j["graph6"].get<std::string>());
    } catch (const std::exception& e) {
        throw Usage(std::string("bad graph6: ") + e.what());
    }
    return report_verdict(verify_certificate(g, j, co.solve_budget()), co.out);
}

int cmd_campaign(const Common& co, const std::string& id, int trials, bool timing, const std::string& results) {
    std::vector<std::string> ids;
    if (id == "all") ids = lemma_ids();
    else if (known_lemma(id)) ids = {id};
    else throw Usage("unknown lemma " + id);
    if (trials < 1) throw Usage("--trials must be positive");
    Output out(co.out);
    bool header = true, clean = true;
    for (const auto& l : ids) {
        CampaignSpec s;
        s.lemma = l;
        s.trials = trials;
        s.seed = co.seed;
        s.mode = co.parsed_mode();
        s.workers = co.workers;
        s.timing = timing;
        s.budget = co.solve_budget();
        CampaignReport r = run_campaign(s);
        std::string csv = report_csv(r);
        if (!header) csv = csv.substr(csv.find('\n') + 1);
        header = false;
        *out << csv;
        std::cerr << report_summary(r).dump() << '\n';
        if (r.fail + r.error > 0) {
            clean = false;
            if (!results.empty())
                for (const auto& p : save_counterexamples(r, results)) std::cerr << "saved " << p << '\n';
        }
    }
    return clean ? kOk : kFail;
}

int cmd_ledger(const Common& co) {
    ConstantLedger l = ledger();
    bool ok = l.d >= 160;
    Json f = Json::object();
    for (const auto& [k, v] : l.formulas) f[k] = v;
    Json j{{"a1", l.a1.str()}, {"b_mid", l.b_mid.str()}, {"a2", l.a2.str()}, {"d", l.d.str()},
           {"formulas", f},    {"d_at_least_160", ok}};
    Output out(co.out);
    *out << j.dump(2) << '\n';
    return ok ? kOk : kFail;
}

int cmd_scan(const Common& co, int trials) {
    if (trials < 1) throw Usage("--trials must be positive");
    ScanReport r = extremal_scan(co.seed, trials, co.workers);
    Output out(co.out);
    *out << scan_csv(r);
    std::cerr << Json{{"rows", r.rows.size()}, {"max_exponent", r.max_exponent}, {"max_graph6", r.max_graph6}}.dump()
              << '\n';
    return kOk;
}

// Accepts a counterexample sidecar ({"invocation": ...}), a certificate
// carrying its invocation, or a bare invocation.
int cmd_replay(const Common& co, const std::string& path) {
    Json j = read_json(path);
    Json inv = j.contains("invocation") ? j["invocation"] : j;
    if (!inv.is_object() || !inv.contains("lemma") || !inv.contains("graph6"))
        throw Usage("no invocation in " + path);
    Certificate c;
    try {
        c = run_invocation(inv, co.solve_budget());
    } catch (const RangeError& e) {
        throw Usage(e.what());
    } catch (const std::exception& e) {
        std::cerr << "replay: " << e.what() << '\n';
        return kFail;
    }
    Verdict v = verify_certificate(from_graph6(inv["graph6"].get<std::string>()), c, co.solve_budget());
    Output out(co.out);
    *out << to_json(c).dump(2) << '\n';
    if (!v.accepted()) std::cerr << "verifier: " << v.reason << '\n';
    return v.accepted() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chiforge: P5-free colouring procedures, oracles and certificate checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with default flag values");

    Common co;
    app.add_option("--seed", co.seed, "base seed")->capture_default_str();
    app.add_option("--mode", co.mode, "strict or relaxed")->capture_default_str();
    app.add_option("--budget", co.budget, "solver vertex budget (default: CHIFORGE_SOLVE_BUDGET or 30)");
    app.add_option("--workers", co.workers, "worker threads for campaign and scan")->check(CLI::PositiveNumber);
    app.add_option("--out,-o", co.out, "write results here instead of stdout");

    Input in;

    std::string family, fparams, p = "1/2", strategy = "repair";
    int n = 0, count = 1;
    auto* gen = app.add_subcommand("gen", "emit P5-free instances as graph6 lines");
    gen->add_option("--family", family, "named family: " + [] {
        std::string s;
        for (const auto& f : family_names()) s += (s.empty() ? "" : ", ") + f;
        return s;
    }());
    gen->add_option("--params", fparams, "comma-separated family parameters");
    gen->add_option("--n", n, "vertex count for random instances");
    gen->add_option("--p", p, "edge probability")->capture_default_str();
    gen->add_option("--strategy", strategy, "rejection or repair")->capture_default_str();
    gen->add_option("--count", count, "number of instances")->capture_default_str();

    auto* chi = app.add_subcommand("chi", "chromatic number and an optimal colouring");
    auto* omega = app.add_subcommand("omega", "clique number and a maximum clique");
    auto* alpha = app.add_subcommand("alpha", "stability number and a maximum stable set");
    auto* p5 = app.add_subcommand("p5check", "find an induced P5 (exit 1 if one exists)");
    for (auto* c : {chi, omega, alpha, p5}) add_input(c, in);

    std::string lemma_id;
    std::vector<std::string> sets, params;
    auto* lemma = app.add_subcommand("lemma", "run one procedure and print its certificate");
    lemma->add_option("id", lemma_id, "lemma id")->required();
    lemma->add_option("--set", sets, "NAME=v1,v2,... (G defaults to all vertices)");
    lemma->add_option("--param", params, "NAME=p/q");
    lemma->add_option("--input,-i", in.path, "graph6 file ('-' or omitted: stdin)");
    lemma->add_option("--graph6,-g", in.graph6, "inline graph6 string")->excludes("--input");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "re-verify a certificate JSON");
    verify->add_option("cert", cert_path, "certificate file ('-': stdin)")->required();

    std::string camp_id, results = "results";
    int trials = 200;
    bool timing = false;
    auto* campaign = app.add_subcommand("campaign", "property campaign for one lemma (or 'all'); CSV report");
    campaign->add_option("id", camp_id, "lemma id or 'all'")->required();
    campaign->add_option("--trials", trials, "instances per lemma")->capture_default_str();
    campaign->add_flag("--timing", timing, "record wall-clock millis (breaks byte determinism)");
    campaign->add_option("--results", results, "counterexample directory ('' to skip)")->capture_default_str();

    auto* ledger_cmd = app.add_subcommand("ledger", "print the exponent chain");

    int scan_trials = 1000;
    auto* scan = app.add_subcommand("scan", "log chi / log omega over random P5-free instances; CSV");
    scan->add_option("--trials", scan_trials, "instances")->capture_default_str();

    std::string replay_path;
    auto* replay = app.add_subcommand("replay", "re-run a stored counterexample or certificate");
    replay->add_option("file", replay_path, "sidecar JSON ('-': stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(co, family, fparams, n, p, strategy, count);
        if (*chi) return cmd_value(co, in, "chi");
        if (*omega) return cmd_value(co, in, "omega");
        if (*alpha) return cmd_value(co, in, "alpha");
        if (*p5) return cmd_p5check(co, in);
        if (*lemma) return cmd_lemma(co, in, lemma_id, sets, params);
        if (*verify) return cmd_verify(co, cert_path);
        if (*campaign) return cmd_campaign(co, camp_id, trials, timing, results);
        if (*ledger_cmd) return cmd_ledger(co);
        if (*scan) return cmd_scan(co, scan_trials);
        if (*replay) return cmd_replay(co, replay_path);
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
