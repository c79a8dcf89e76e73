#include "chiforge/graph.hpp"

#include <algorithm>
#include <sstream>

namespace chiforge {

std::string VertexSet::str() const {
    std::string out = "{";
    bool first_elem = true;
    for (int v : *this) {
        if (!first_elem) out += ',';
        out += std::to_string(v);
        first_elem = false;
    }
    return out + "}";
}

bool least_index_less(const VertexSet& a, const VertexSet& b) {
    int x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next(x + 1);
        y = b.next(y + 1);
    }
    // a proper prefix sorts first; the empty set sorts before everything
    return x < 0 && y >= 0;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " out of range");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop at " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

int Graph::edge_count() const {
    int m = 0;
    for (const auto& row : adj_) m += row.size();
    return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
}

const char* to_string(PairKind k) {
    switch (k) {
        case PairKind::complete: return "complete";
        case PairKind::anticomplete: return "anticomplete";
        case PairKind::mixed: return "mixed";
    }
    return "?";
}

const char* to_string(Mixed m) {
    switch (m) {
        case Mixed::pure_complete: return "pure-complete";
        case Mixed::pure_anticomplete: return "pure-anticomplete";
        case Mixed::mixed: return "mixed";
    }
    return "?";
}

void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw GraphError("vertex set " + s.str() + " not inside 0.." + std::to_string(g.n() - 1));
}

Graph induced(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    std::vector<int> idx = s.to_vector();
    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) pos[idx[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < static_cast<int>(idx.size()); ++i)
        for (int u : g.nbrs(idx[i]) & s)
            if (pos[u] > i) es.emplace_back(i, pos[u]);
    return Graph(static_cast<int>(idx.size()), es);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph(g.n(), es);
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s, ComponentMode mode) {
    check_subset(g, s);
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first());
        VertexSet frontier = comp;
        left -= comp;
        while (!frontier.empty()) {
            VertexSet grow;
            for (int v : frontier) {
                // anticonnected mode walks the complement inside S
                grow |= mode == ComponentMode::connected ? (g.nbrs(v) & left) : (left - g.nbrs(v));
            }
            grow &= left;
            left -= grow;
            comp |= grow;
            frontier = grow;
        }
        out.push_back(comp);
    }
    return out;
}

bool is_complete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (!b.subset_of(g.nbrs(v))) return false;
    return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        if (g.nbrs(v).intersects(b)) return false;
    return true;
}

PairKind classify_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_subset(g, a);
    check_subset(g, b);
    if (a.empty() || b.empty()) throw GraphError("classify_pair on an empty set");
    if (a.intersects(b)) throw GraphError("classify_pair on overlapping sets " + a.str() + " " + b.str());
    if (is_complete_to(g, a, b)) return PairKind::complete;
    if (is_anticomplete_to(g, a, b)) return PairKind::anticomplete;
    return PairKind::mixed;
}

Mixed mixed_on(const Graph& g, int v, const VertexSet& s) {
    check_subset(g, s);
    if (v < 0 || v >= g.n()) throw GraphError("vertex out of range");
    if (s.contains(v)) throw GraphError("mixed_on: vertex lies in the set");
    if (s.empty()) throw GraphError("mixed_on: empty set");
    bool some_nbr = g.nbrs(v).intersects(s);
    bool some_non = !s.subset_of(g.nbrs(v));
    if (some_nbr && some_non) return Mixed::mixed;
    return some_nbr ? Mixed::pure_complete : Mixed::pure_anticomplete;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (!(s - VertexSet::single(v)).subset_of(g.nbrs(v))) return false;
    return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.nbrs(v).intersects(s)) return false;
    return true;
}

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    // Each level extends the path by a neighbour of the tail that avoids the
    // closed neighbourhoods of all earlier vertices; ascending order at every
    // level yields the lexicographically least tuple.
    for (int a : s) {
        VertexSet ca = g.closed_nbrs(a);
        for (int b : g.nbrs(a) & s) {
            VertexSet cb = ca | g.closed_nbrs(b);
            for (int c : (g.nbrs(b) & s) - ca) {
                VertexSet cc = cb | g.closed_nbrs(c);
                for (int d : (g.nbrs(c) & s) - cb) {
                    VertexSet e = (g.nbrs(d) & s) - cc;
                    if (!e.empty()) return std::array<int, 5>{a, b, c, d, e.first()};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 5>> find_induced_p5(const Graph& g) {
    return find_induced_p5(g, g.vertices());
}

std::string to_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw GraphError("graph6: empty input");
    for (char ch : line)
        if (ch < 63 || ch > 126) throw GraphError("graph6: byte out of range");
    std::size_t pos = 0;
    int n;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == '~') throw GraphError("graph6: unsupported header");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | (line[k] - 63);
        if (n < 63) throw GraphError("graph6: non-canonical header");
        pos = 4;
    }
    if (n > kMaxVertices) throw GraphError("graph6: more than " + std::to_string(kMaxVertices) + " vertices");
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need = (bits + 5) / 6;
    if (line.size() - pos != need)
        throw GraphError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                         std::to_string(line.size() - pos));
    std::vector<std::pair<int, int>> es;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = line[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
        }
    if (k % 6) {
        int byte = line[pos + k / 6] - 63;
        if (byte & ((1 << (6 - k % 6)) - 1)) throw GraphError("graph6: nonzero padding bits");
    }
    return Graph(n, es);
}

std::string to_adjacency_text(const Graph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_adjacency_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    int n, m;
    if (!(is >> n >> m) || m < 0) throw GraphError("adjacency text: bad header");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw GraphError("adjacency text: expected " + std::to_string(m) + " edges");
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

}  // namespace chiforge
