#include "chiforge/generators.hpp"

namespace chiforge {

bool Rng::bernoulli(const Rational& p) {
    if (p <= 0) return false;
    if (p >= 1) {
        next();
        return true;
    }
    Int threshold = floor(p * Rational(Int(1) << 53));
    return Int(next() >> 11) < threshold;
}

std::uint64_t Rng::below(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
    while (true) {
        std::uint64_t x = next();
        if (x < limit) return x % m;
    }
}

Graph gnp(int n, const Rational& p, Rng& rng) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) es.emplace_back(i, j);
    return Graph(n, es);
}

namespace {

void check_p5free(const Graph& g, const char* what) {
    if (auto w = find_induced_p5(g))
        throw GenError(std::string(what) + " contains an induced P5 at (" + std::to_string((*w)[0]) + "," +
                       std::to_string((*w)[1]) + "," + std::to_string((*w)[2]) + "," + std::to_string((*w)[3]) +
                       "," + std::to_string((*w)[4]) + ")");
}

}  // namespace

Graph random_p5free(const GenSpec& spec) {
    if (spec.n < 0) throw GenError("negative vertex count");
    if (spec.p < 0 || spec.p > 1) throw GenError("edge probability outside [0,1]");
    Rng rng(spec.seed);
    switch (spec.strategy) {
        case Strategy::rejection:
            for (int t = 0; t < spec.retry_cap; ++t) {
                Graph g = gnp(spec.n, spec.p, rng);
                if (!find_induced_p5(g)) return g;
            }
            throw GenError("rejection sampling exceeded " + std::to_string(spec.retry_cap) + " retries");
        case Strategy::repair: {
            Graph g = gnp(spec.n, spec.p, rng);
            while (auto w = find_induced_p5(g)) g = induced(g, g.vertices() - VertexSet::single((*w)[0]));
            return g;
        }
        case Strategy::family: {
            Graph g = family(spec.family, spec.params, spec.seed);
            check_p5free(g, "family output");
            return g;
        }
    }
    throw GenError("unknown strategy");
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n && n >= 3; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    std::vector<int> part_of;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
        if (parts[i] < 0) throw GenError("negative part size");
        part_of.insert(part_of.end(), parts[i], i);
    }
    int n = static_cast<int>(part_of.size());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph split_graph(int k, int s, const Rational& p, Rng& rng) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < s; ++j)
            if (rng.bernoulli(p)) es.emplace_back(i, k + j);
    return Graph(k + s, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    return Graph(a.n() + b.n(), es);
}

Graph join(const Graph& a, const Graph& b) {
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) es.emplace_back(u, a.n() + v);
    return Graph(a.n() + b.n(), es);
}

Graph random_cograph(int n, Rng& rng) {
    if (n <= 1) return Graph(n);
    int a = rng.between(1, n - 1);
    Graph left = random_cograph(a, rng);
    Graph right = random_cograph(n - a, rng);
    return (rng.next() & 1) ? join(left, right) : disjoint_union(left, right);
}

Graph substitute(const Graph& g, int v, const Graph& h) {
    if (v < 0 || v >= g.n()) throw GenError("substitute: vertex out of range");
    if (h.n() == 0) throw GenError("substitute: empty replacement");
    check_p5free(g, "substitute host");
    check_p5free(h, "substitute replacement");
    int n = g.n() - 1 + h.n();
    auto id = [&](int hv) { return hv == 0 ? v : g.n() + hv - 1; };
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) es.emplace_back(a, b);
    for (auto [a, b] : h.edges()) es.emplace_back(id(a), id(b));
    for (int u : g.nbrs(v))
        for (int hv = 0; hv < h.n(); ++hv) es.emplace_back(u, id(hv));
    Graph out(n, es);
    check_p5free(out, "substitute output");
    return out;
}

std::vector<std::string> family_names() {
    return {"complete_multipartite", "split", "cograph", "cycle5", "complete", "edgeless", "blowup", "cograph_union"};
}

Graph family(const std::string& name, const std::vector<int>& params, std::uint64_t seed) {
    Rng rng(seed);
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw GenError("family " + name + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "complete_multipartite") return complete_multipartite(params);
    if (name == "split") {
        need(2);
        return split_graph(params[0], params[1], Rational(1, 2), rng);
    }
    if (name == "cograph") {
        need(1);
        return random_cograph(params[0], rng);
    }
    if (name == "cycle5") {
        need(0);
        return cycle_graph(5);
    }
    if (name == "complete") {
        need(1);
        return complete_graph(params[0]);
    }
    if (name == "edgeless") {
        need(1);
        return edgeless_graph(params[0]);
    }
    if (name == "blowup") {
        need(1);
        Graph g = cycle_graph(5);
        for (int r = 0; r < params[0]; ++r) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            g = substitute(g, v, random_cograph(rng.between(1, 3), rng));
        }
        return g;
    }
    if (name == "cograph_union") {
        // two random cographs side by side: disconnected instances
        need(1);
        int a = rng.between(1, std::max(1, params[0] - 1));
        return disjoint_union(random_cograph(a, rng), random_cograph(std::max(0, params[0] - a), rng));
    }
    throw GenError("unknown family '" + name + "'");
}

}  // namespace chiforge
