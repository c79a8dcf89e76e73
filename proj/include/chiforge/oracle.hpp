#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chiforge/graph.hpp"
#include "chiforge/rational.hpp"

namespace chiforge {

// Raised instead of returning an approximate answer.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hard ceiling of the local solver (64-bit masks).
inline constexpr int kSolverCeiling = 64;
inline constexpr int kDefaultBudget = 30;

// CHIFORGE_SOLVE_BUDGET if set and valid, else 30.
int default_budget();

struct Coloring {
    int k = 0;
    std::vector<int> color;  // indexed by vertex of the host graph; -1 outside the set
};

enum class ExtremalKind { clique, stable };

struct ExtremalWitness {
    ExtremalKind kind = ExtremalKind::clique;
    VertexSet members;
    int size() const { return members.size(); }
};

// Exact χ/ω/α of induced subgraphs of one graph, memoised by subset.
// Not synchronised: give each task its own instance.
class Oracle {
public:
    explicit Oracle(Graph g, int budget = default_budget());

    const Graph& graph() const { return g_; }
    int budget() const { return budget_; }

    int chi(const VertexSet& s);
    Coloring chi_witness(const VertexSet& s);
    int omega(const VertexSet& s) { return extremal(s, ExtremalKind::clique).size(); }
    int alpha(const VertexSet& s) { return extremal(s, ExtremalKind::stable).size(); }
    ExtremalWitness extremal(const VertexSet& s, ExtremalKind kind);

    int chi() { return chi(g_.vertices()); }

    // Entries beyond the capacity trigger a full flush.
    void set_capacity(std::size_t cap) { capacity_ = cap; }
    void clear() { cache_.clear(); }
    std::size_t cached() const { return cache_.size(); }
    std::size_t solves() const { return solves_; }
    std::size_t hits() const { return hits_; }

private:
    struct Entry {
        std::optional<Coloring> coloring;
        std::optional<ExtremalWitness> clique, stable;
    };
    Entry& entry(const VertexSet& s);
    void guard(const VertexSet& s) const;

    Graph g_;
    int budget_;
    std::size_t capacity_ = 1u << 20;
    std::size_t solves_ = 0, hits_ = 0;
    std::unordered_map<VertexSet, Entry, VertexSetHash> cache_;
};

// Uncached solvers on G[S]; |S| <= kSolverCeiling.
Coloring solve_chi(const Graph& g, const VertexSet& s);
ExtremalWitness solve_extremal(const Graph& g, const VertexSet& s, ExtremalKind kind);

bool verify_coloring(const Graph& g, const VertexSet& s, const Coloring& w);

struct DensityResult {
    bool dense = true;
    int violator = -1;
};

// G[S] is (ε,χ)-dense: χ(S \ N[v]) < ε·χ(S) for every v in S.
DensityResult self_dense(Oracle& o, const VertexSet& s, const Rational& eps);
// B is (ε,χ)-dense to A: χ(A \ N(v)) < ε·χ(A) for every v in B.
DensityResult dense_to(Oracle& o, const VertexSet& a, const VertexSet& b, const Rational& eps);

// Clique or stable set of G with at least ceil(n^(1/a)) vertices; the larger
// of the two extremal sets, clique on ties. a = ap/aq as an exact rational.
ExtremalWitness eh_extract(Oracle& o, const VertexSet& s, const Rational& a);

}  // namespace chiforge
