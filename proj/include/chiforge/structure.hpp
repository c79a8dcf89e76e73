#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chiforge/certificate.hpp"

namespace chiforge {

// Shared state of one procedure run: the oracle, the mode and the ordered
// trace of proof-step choices. Sub-procedures append to the same trace.
struct Ctx {
    Oracle& o;
    Mode mode = Mode::relaxed;
    Json trace = Json::array();
    std::vector<std::string> waivers;
    int depth = 0;

    Ctx(Oracle& oracle, Mode m) : o(oracle), mode(m) {}
    void note(const std::string& step, Json detail = Json::object());
    const Graph& graph() const { return o.graph(); }
    const std::string& graph6();

private:
    std::string g6_;
};

// Increments ctx.depth for the lifetime of a sub-procedure call.
struct Nested {
    Ctx& ctx;
    explicit Nested(Ctx& c) : ctx(c) { ++ctx.depth; }
    ~Nested() { --ctx.depth; }
    Nested(const Nested&) = delete;
    Nested& operator=(const Nested&) = delete;
};

// The (p,q)-sparsity hypothesis failed on the induced subgraph f.
class SparsityError : public HypothesisError {
public:
    SparsityError(const std::string& msg, const VertexSet& where) : HypothesisError(msg), f(where) {}
    VertexSet f;
};

// Draft certificate for `lemma`, bullet `bullet`, with the ground set G.
Certificate draft(Ctx& ctx, const std::string& lemma, int bullet, const VertexSet& g);
// Seals the draft if its statement holds (relations, claims and, in strict
// mode, gates); otherwise records the rejected candidate in the trace.
std::optional<Certificate> try_outcome(Ctx& ctx, Certificate c, const std::string& why);
// Checks ranges and the bullet-0 hypotheses of a draft. Throws RangeError or
// HypothesisError; gates throw GateError in strict mode and are recorded as
// waivers in relaxed mode.
void check_entry(Ctx& ctx, const Certificate& hyp);

// Raises a GraphError carrying the P5 found inside S, for proof steps whose
// failure would mean an induced P5.
[[noreturn]] void p5_contradiction(const Graph& g, const VertexSet& s, const std::string& step);

struct GyarfasWitness {
    int v = -1;
    int chiN = 0;
    int chiG = 0;
};

// First vertex of S (index order) with 3·χ(N(v) ∩ S) >= χ(S).
GyarfasWitness gyarfas_vertex(Oracle& o, const VertexSet& s);
Certificate gyarfas_certificate(Ctx& ctx, const VertexSet& s);

Certificate bip_trichotomy(Ctx& ctx, const VertexSet& g, int v, const VertexSet& a, const VertexSet& b,
                           const Rational& eps);
Certificate pure_or_dense(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& delta);

// η^⌈log2(1/ε)⌉ with η = ε²/128.
Rational rodl_delta(const Rational& eps);
Certificate rodl_chi(Ctx& ctx, const VertexSet& g, const Rational& eps);

// Anticomplete pair with both sides connected, χ(A) >= χ(B) >= p, maximising
// χ(A)+χ(B) then |A|+|B|. Exhaustive up to kSparseExhaustive vertices.
struct SparsePair {
    VertexSet a, b;
};
inline constexpr int kSparseExhaustive = 18;
std::optional<SparsePair> sparse_pair(Oracle& o, const VertexSet& f, const Rational& p);

Certificate decompose_anti(Ctx& ctx, const VertexSet& g, const Rational& eps, const Rational& p,
                           const Rational& q);

// φ_{r,s}(c) = ∏_{r<i<=s} (1 - c^(2^(i+1))); φ_s = φ_{0,s}.
Rational phi_eval(const Rational& c, int r, int s);

Certificate grow_anticomplete(Ctx& ctx, const VertexSet& g, const Rational& c, int s);
Certificate anti_or_dense(Ctx& ctx, const VertexSet& g, const Rational& a, const Rational& c);

// A vertex outside A ∪ B mixed on both, if any.
std::optional<int> mixed_on_both(const Graph& g, const VertexSet& a, const VertexSet& b);

// Minimal cutset Z separating connected anticomplete A, B inside S, with
// A, B grown to the full components of G[S \ Z] that contain them.
struct Cutset {
    VertexSet a, b, z;
};
Cutset minimal_cutset(const Graph& g, const VertexSet& s, const VertexSet& a, const VertexSet& b);

// Union of neighbourhoods of the vertices of S (may meet S).
VertexSet neighbourhood(const Graph& g, const VertexSet& s);

// Maximal component of G[S]: largest χ, least minimum vertex on ties.
VertexSet maximal_component(Oracle& o, const VertexSet& s);

}  // namespace chiforge
