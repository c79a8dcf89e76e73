#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chiforge/vertex_set.hpp"

namespace chiforge {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {});

    int n() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    const VertexSet& nbrs(int v) const { return adj_[v]; }
    VertexSet closed_nbrs(int v) const {
        VertexSet s = adj_[v];
        s.insert(v);
        return s;
    }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

enum class ComponentMode { connected, anticonnected };
enum class PairKind { complete, anticomplete, mixed };
enum class Mixed { pure_complete, pure_anticomplete, mixed };

const char* to_string(PairKind k);
const char* to_string(Mixed m);

// Throws GraphError if S has a vertex outside 0..n-1.
void check_subset(const Graph& g, const VertexSet& s);

// G[S] relabelled by increasing original index.
Graph induced(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

// Components of G[S] (or of its complement), ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s, ComponentMode mode);

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b);
PairKind classify_pair(const Graph& g, const VertexSet& a, const VertexSet& b);
Mixed mixed_on(const Graph& g, int v, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);

// Lexicographically least (v1..v5) inducing P5, if any.
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g);
std::optional<std::array<int, 5>> find_induced_p5(const Graph& g, const VertexSet& s);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// "n m\nu v\n..." edge list.
std::string to_adjacency_text(const Graph& g);
Graph from_adjacency_text(std::string_view text);

}  // namespace chiforge
