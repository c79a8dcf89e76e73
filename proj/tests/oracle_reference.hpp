#pragma once

// Test-side reference oracles, deliberately naive and independent of the
// library solvers.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chiforge/graph.hpp"

namespace ref {

inline bool k_colourable(const chiforge::Graph& g, int k) {
    int n = g.n();
    std::vector<int> col(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && col[u] == c) ok = false;
            if (!ok) continue;
            col[v] = c;
            if (self(self, v + 1)) return true;
        }
        col[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

inline int chi_backtrack(const chiforge::Graph& g) {
    int k = 0;
    while (!k_colourable(g, k)) ++k;
    return k;
}

// χ by dynamic programming over subsets: f(S) = 1 + min over independent I ⊆ S.
inline int chi_subset_dp(const chiforge::Graph& g) {
    int n = g.n();
    std::uint32_t full = (1u << n) - 1;
    std::vector<char> indep(1u << n, 0);
    for (std::uint32_t s = 0; s <= full; ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((s >> i & 1) && (s >> j & 1) && g.adjacent(i, j)) ok = false;
        indep[s] = ok;
    }
    std::vector<int> f(1u << n, 1 << 20);
    f[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s)
        for (std::uint32_t t = s; t; t = (t - 1) & s)
            if (indep[t] && f[s ^ t] + 1 < f[s]) f[s] = f[s ^ t] + 1;
    return f[full];
}

inline int max_clique_brute(const chiforge::Graph& g, bool complement = false) {
    int n = g.n(), best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((s >> i & 1) && (s >> j & 1) && g.adjacent(i, j) == complement) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Lexicographically least ordered 5-tuple inducing P5: every tuple of
// distinct vertices, with the adjacency pattern checked on each prefix.
inline std::optional<std::array<int, 5>> naive_p5(const chiforge::Graph& g) {
    int n = g.n();
    std::array<int, 5> t{};
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == 5) return true;
        for (t[k] = 0; t[k] < n; ++t[k]) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                ok = t[i] != t[k] && g.adjacent(t[i], t[k]) == (i == k - 1);
            if (ok && self(self, k + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0)) return t;
    return std::nullopt;
}

}  // namespace ref
