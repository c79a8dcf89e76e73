#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chiforge/graph.hpp"
#include "chiforge/oracle.hpp"
#include "chiforge/rational.hpp"

namespace chiforge {

using Json = nlohmann::ordered_json;

enum class Mode { strict, relaxed };
const char* to_string(Mode m);
Mode parse_mode(const std::string& s);

// Failure kinds raised by lemma procedures. Campaigns tally GateError as
// "waived" and everything else as "error".
class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class GateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NoOutcome : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class CertError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relation vocabulary (a, b are set names; "v" names a singleton set):
//   subset a⊆b, disjoint, nonempty a, singleton a, connected a, anticonnected a,
//   complete, anticomplete, pure, anticomplete_or_dense (eps),
//   dense_to (eps): every u in a has χ(b \ N(u)) < eps·χ(b),
//   self_dense (eps): every u in a has χ(a \ N[u]) < eps·χ(a),
//   nonnbr_at_most (eps): every u in b has χ(a \ N(u)) <= eps,
//   in_nbhd a ⊆ N(v), off_closed_nbhd a ∩ N[v] = ∅, nbhd a = N(v) ∩ G,
//   not_mixed_on_two: no u in a is mixed on two of the blocks b1, b2, ...
struct Relation {
    std::string rel, a, b;
    std::optional<Threshold> eps;
};

// Integer-valued term compared against an exact bound. Terms: chi(X),
// size(X), blocks(P) (number of sets P1, P2, ...), count(L) (length of list L).
struct Claim {
    std::string term;
    Int lhs = 0;
    std::string rel;  // ">=" or "<="
    Rational rhs = 0;
    std::string meaning;
};

struct Certificate {
    std::string kind, lemma;
    int bullet = 0;
    std::string graph6;
    Mode mode = Mode::relaxed;
    char cls = 'B';
    std::vector<std::pair<std::string, Rational>> params;
    std::vector<std::pair<std::string, VertexSet>> sets;
    std::vector<std::pair<std::string, std::vector<int>>> lists;
    std::vector<Relation> relations;
    std::vector<Claim> claims;
    std::vector<std::string> waivers;
    Json trace = Json::array();
    Json invocation = Json::object();

    bool has_set(const std::string& name) const;
    const VertexSet& set(const std::string& name) const;
    void put_set(const std::string& name, const VertexSet& s);
    bool has_param(const std::string& name) const;
    const Rational& param(const std::string& name) const;
    void put_param(const std::string& name, const Rational& r);
    bool has_list(const std::string& name) const;
    const std::vector<int>& list(const std::string& name) const;
    void put_list(const std::string& name, std::vector<int> l);
    // Names prefix1, prefix2, ... present, in order.
    std::vector<std::string> blocks(const std::string& prefix) const;
    void put_blocks(const std::string& prefix, const std::vector<VertexSet>& bs);
};

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
Json threshold_to_json(const Threshold& t);
Threshold threshold_from_json(const Json& j);

// What a certificate must satisfy: the hypotheses of its lemma (bullet 0)
// plus the outcome of its bullet. Gates are the magnitude preconditions that
// relaxed mode waives.
struct Statement {
    std::string kind;
    std::vector<Relation> relations;
    std::vector<Claim> claims;
    std::vector<Claim> gates;
    std::vector<std::string> range_errors;
};

Statement build_statement(Oracle& o, const Certificate& c);
bool known_lemma(const std::string& lemma);
const std::vector<std::string>& lemma_ids();
char lemma_class(const std::string& lemma);

// Evaluates one relation or claim; returns an empty string when it holds,
// otherwise a reason naming the violation.
std::string check_relation(Oracle& o, const Certificate& c, const Relation& r);
std::string check_claim(Oracle& o, const Certificate& c, const Claim& cl);
Int evaluate_term(Oracle& o, const Certificate& c, const std::string& term);

struct Verdict {
    enum class Status { accept, reject, budget } status = Status::accept;
    std::string reason;
    bool accepted() const { return status == Status::accept; }
};

Verdict verify_certificate(const Graph& g, const Certificate& c, int budget = default_budget());
Verdict verify_certificate(const Graph& g, const Json& j, int budget = default_budget());

// Planted faults, each of which makes the certificate invalid.
struct Mutation {
    std::string name;
    Json cert;
};
std::vector<Mutation> plant_faults(const Certificate& c, int n, int count = 10);

}  // namespace chiforge
