#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "chiforge/graph.hpp"
#include "chiforge/rational.hpp"

namespace chiforge {

// Project-wide PRNG: std::mt19937_64 (its output sequence is fixed by the
// C++ standard). Derived draws avoid std distributions, whose algorithms
// are implementation-defined:
//   bernoulli(p): (next() >> 11) < floor(p * 2^53)
//   below(m):     next() % m, redrawing values >= the largest multiple of m
class Rng {
public:
    explicit Rng(std::uint64_t seed) : e_(seed) {}
    std::uint64_t next() { return e_(); }
    bool bernoulli(const Rational& p);
    std::uint64_t below(std::uint64_t m);
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 e_;
};

enum class Strategy { rejection, repair, family };

struct GenSpec {
    Strategy strategy = Strategy::repair;
    int n = 0;
    Rational p = Rational(1, 2);
    std::uint64_t seed = 0;
    std::string family;          // for Strategy::family
    std::vector<int> params;     // family parameters
    int retry_cap = 10000;       // rejection only
};

class GenError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Graph gnp(int n, const Rational& p, Rng& rng);

// P5-free instance; throws GenError if rejection exceeds its retry cap.
Graph random_p5free(const GenSpec& spec);

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
// Clique on 0..k-1, stable set on k..k+s-1, cross edges with probability p.
Graph split_graph(int k, int s, const Rational& p, Rng& rng);
// Random cograph: split the vertex count, recurse, then union or join.
Graph random_cograph(int n, Rng& rng);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// Replaces v by H: H's vertex 0 takes index v, H's other vertices are
// appended after G's. Every H-vertex is joined to N_G(v).
Graph substitute(const Graph& g, int v, const Graph& h);

// Named families: complete_multipartite [parts...], split [k s], cograph [n],
// cycle5 [], complete [n], edgeless [n], blowup [rounds] (C5 with random
// cograph substitutions), cograph_union [n]. Randomised families use seed.
Graph family(const std::string& name, const std::vector<int>& params, std::uint64_t seed = 0);
std::vector<std::string> family_names();

}  // namespace chiforge
