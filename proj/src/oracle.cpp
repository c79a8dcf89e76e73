#include "chiforge/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace chiforge {

int default_budget() {
    if (const char* env = std::getenv("CHIFORGE_SOLVE_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= kSolverCeiling) return static_cast<int>(v);
    }
    return kDefaultBudget;
}

namespace {

using Mask = std::uint64_t;

// G[S] relabelled onto 0..m-1 as 64-bit rows.
struct Local {
    int m = 0;
    std::vector<int> host;  // local -> host vertex
    std::vector<Mask> adj;
};

Local localise(const Graph& g, const VertexSet& s) {
    Local l;
    l.host = s.to_vector();
    l.m = static_cast<int>(l.host.size());
    if (l.m > kSolverCeiling) throw BudgetError("instance too large for the exact solver");
    l.adj.assign(l.m, 0);
    for (int i = 0; i < l.m; ++i)
        for (int j = i + 1; j < l.m; ++j)
            if (g.adjacent(l.host[i], l.host[j])) {
                l.adj[i] |= Mask{1} << j;
                l.adj[j] |= Mask{1} << i;
            }
    return l;
}

inline int low(Mask x) { return std::countr_zero(x); }

// Branch and bound for a maximum clique, pruned by greedy colouring.
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) {}

    Mask run(Mask p) {
        best_ = 0;
        best_size_ = 0;
        expand(0, 0, p);
        return best_;
    }

private:
    void expand(Mask cur, int cur_size, Mask p) {
        if (!p) {
            if (cur_size > best_size_) {
                best_size_ = cur_size;
                best_ = cur;
            }
            return;
        }
        // colour classes of P in order; bound[i] = colour count up to order[i]
        std::array<int, 64> order{}, bound{};
        int cnt = 0, colour = 0;
        Mask uncoloured = p;
        while (uncoloured) {
            ++colour;
            Mask q = uncoloured;
            while (q) {
                int v = low(q);
                q &= ~(Mask{1} << v);
                q &= ~adj_[v];
                uncoloured &= ~(Mask{1} << v);
                order[cnt] = v;
                bound[cnt] = colour;
                ++cnt;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (cur_size + bound[i] <= best_size_) return;
            int v = order[i];
            expand(cur | (Mask{1} << v), cur_size + 1, p & adj_[v]);
            p &= ~(Mask{1} << v);
        }
    }

    const std::vector<Mask>& adj_;
    Mask best_ = 0;
    int best_size_ = 0;
};

// DSATUR over one connected component.
class Colourer {
public:
    Colourer(const std::vector<Mask>& adj, Mask comp) : adj_(adj), comp_(comp) {
        for (Mask q = comp; q; q &= q - 1) verts_.push_back(low(q));
        colour_.assign(adj.size(), -1);
        cnt_.assign(adj.size() * 64, 0);
    }

    // Greedy DSATUR; returns the colour count.
    int greedy() {
        reset();
        int used = 0;
        for (std::size_t step = 0; step < verts_.size(); ++step) {
            int v = pick();
            Mask f = forbidden(v);
            int c = std::countr_one(f);
            assign(v, c);
            used = std::max(used, c + 1);
        }
        best_ = colour_;
        return used;
    }

    // Exact k-colourability by DSATUR backtracking.
    bool colourable(int k) {
        reset();
        k_ = k;
        bool ok = search(0, 0);
        if (ok) best_ = colour_;
        return ok;
    }

    const std::vector<int>& best() const { return best_; }

private:
    void reset() {
        std::fill(colour_.begin(), colour_.end(), -1);
        std::fill(cnt_.begin(), cnt_.end(), 0);
    }
    Mask forbidden(int v) const {
        Mask f = 0;
        for (int c = 0; c < 64; ++c)
            if (cnt_[v * 64 + c]) f |= Mask{1} << c;
        return f;
    }
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v : verts_) {
            if (colour_[v] >= 0) continue;
            int sat = std::popcount(forbidden(v));
            int deg = 0;
            for (Mask q = adj_[v] & comp_; q; q &= q - 1)
                if (colour_[low(q)] < 0) ++deg;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }
    void assign(int v, int c) {
        colour_[v] = c;
        for (Mask q = adj_[v] & comp_; q; q &= q - 1) ++cnt_[low(q) * 64 + c];
    }
    void unassign(int v) {
        int c = colour_[v];
        for (Mask q = adj_[v] & comp_; q; q &= q - 1) --cnt_[low(q) * 64 + c];
        colour_[v] = -1;
    }
    bool search(std::size_t done, int used) {
        if (done == verts_.size()) return true;
        int v = pick();
        Mask f = forbidden(v);
        if (std::popcount(f) >= k_) return false;
        // a fresh colour is interchangeable with any other fresh colour
        int top = std::min(used + 1, k_);
        for (int c = 0; c < top; ++c) {
            if (f >> c & 1) continue;
            assign(v, c);
            if (search(done + 1, std::max(used, c + 1))) return true;
            unassign(v);
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    Mask comp_;
    std::vector<int> verts_;
    std::vector<int> colour_, best_;
    std::vector<int> cnt_;
    int k_ = 0;
};

std::vector<Mask> local_components(const Local& l) {
    std::vector<Mask> out;
    Mask left = l.m == 64 ? ~Mask{0} : ((Mask{1} << l.m) - 1);
    while (left) {
        Mask comp = Mask{1} << low(left), frontier = comp;
        left &= ~comp;
        while (frontier) {
            Mask grow = 0;
            for (Mask q = frontier; q; q &= q - 1) grow |= l.adj[low(q)];
            grow &= left;
            left &= ~grow;
            comp |= grow;
            frontier = grow;
        }
        out.push_back(comp);
    }
    return out;
}

}  // namespace

Coloring solve_chi(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    Local l = localise(g, s);
    Coloring out;
    out.color.assign(g.n(), -1);
    for (Mask comp : local_components(l)) {
        int lb = std::popcount(CliqueSearch(l.adj).run(comp));
        Colourer col(l.adj, comp);
        int ub = col.greedy();
        std::vector<int> best = col.best();
        // smallest feasible k in [lb, ub); the greedy colouring covers ub
        for (int k = lb; k < ub; ++k) {
            if (col.colourable(k)) {
                ub = k;
                best = col.best();
                break;
            }
        }
        out.k = std::max(out.k, ub);
        for (Mask q = comp; q; q &= q - 1) out.color[l.host[low(q)]] = best[low(q)];
    }
    return out;
}

ExtremalWitness solve_extremal(const Graph& g, const VertexSet& s, ExtremalKind kind) {
    check_subset(g, s);
    Local l = localise(g, s);
    Mask all = l.m == 64 ? ~Mask{0} : ((Mask{1} << l.m) - 1);
    if (kind == ExtremalKind::stable)
        for (int i = 0; i < l.m; ++i) l.adj[i] = all & ~l.adj[i] & ~(Mask{1} << i);
    Mask best = CliqueSearch(l.adj).run(all);
    ExtremalWitness w;
    w.kind = kind;
    for (Mask q = best; q; q &= q - 1) w.members.insert(l.host[low(q)]);
    return w;
}

bool verify_coloring(const Graph& g, const VertexSet& s, const Coloring& w) {
    if (static_cast<int>(w.color.size()) != g.n()) throw GraphError("colouring domain mismatch");
    std::vector<char> seen(std::max(w.k, 0), 0);
    for (int v = 0; v < g.n(); ++v) {
        bool in = s.contains(v);
        if (in != (w.color[v] >= 0)) throw GraphError("colouring domain mismatch at vertex " + std::to_string(v));
        if (!in) continue;
        if (w.color[v] >= w.k) return false;
        seen[w.color[v]] = 1;
        for (int u : g.nbrs(v) & s)
            if (w.color[u] == w.color[v]) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Oracle::Oracle(Graph g, int budget) : g_(std::move(g)), budget_(std::min(budget, kSolverCeiling)) {}

void Oracle::guard(const VertexSet& s) const {
    check_subset(g_, s);
    if (s.size() > budget_)
        throw BudgetError("instance too large: " + std::to_string(s.size()) + " vertices exceeds the exact-solve budget " +
                          std::to_string(budget_));
}

Oracle::Entry& Oracle::entry(const VertexSet& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    if (cache_.size() >= capacity_) cache_.clear();
    return cache_[s];
}

int Oracle::chi(const VertexSet& s) {
    if (s.empty()) return 0;
    return chi_witness(s).k;
}

Coloring Oracle::chi_witness(const VertexSet& s) {
    guard(s);
    Entry& e = entry(s);
    if (e.coloring) {
        ++hits_;
        return *e.coloring;
    }
    ++solves_;
    e.coloring = solve_chi(g_, s);
    return *e.coloring;
}

ExtremalWitness Oracle::extremal(const VertexSet& s, ExtremalKind kind) {
    guard(s);
    Entry& e = entry(s);
    auto& slot = kind == ExtremalKind::clique ? e.clique : e.stable;
    if (slot) {
        ++hits_;
        return *slot;
    }
    ++solves_;
    slot = solve_extremal(g_, s, kind);
    return *slot;
}

DensityResult self_dense(Oracle& o, const VertexSet& s, const Rational& eps) {
    Rational bound = eps * o.chi(s);
    for (int v : s)
        if (Rational(o.chi(s - o.graph().closed_nbrs(v))) >= bound) return {false, v};
    return {};
}

DensityResult dense_to(Oracle& o, const VertexSet& a, const VertexSet& b, const Rational& eps) {
    Rational bound = eps * o.chi(a);
    for (int v : b)
        if (Rational(o.chi(a - o.graph().nbrs(v))) >= bound) return {false, v};
    return {};
}

ExtremalWitness eh_extract(Oracle& o, const VertexSet& s, const Rational& a) {
    if (a < 1) throw std::domain_error("eh_extract needs a >= 1");
    if (auto w = find_induced_p5(o.graph(), s))
        throw GraphError("eh_extract: input contains an induced P5");
    ExtremalWitness c = o.extremal(s, ExtremalKind::clique);
    ExtremalWitness t = o.extremal(s, ExtremalKind::stable);
    ExtremalWitness best = c.size() >= t.size() ? c : t;
    if (s.empty()) return best;
    // |W| >= n^(1/a) with a = p/q  <=>  |W|^p >= n^q
    long p = boost::multiprecision::numerator(a).convert_to<long>();
    long q = boost::multiprecision::denominator(a).convert_to<long>();
    Int need = ceil_root(Rational(s.size()), q, p);
    if (best.size() < need)
        throw std::runtime_error("eh_extract: no clique or stable set of size " + need.str() + " for exponent " +
                                 to_string(a));
    return best;
}

}  // namespace chiforge
