// Helpers shared by the lemma procedures (internal).
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiforge/structure.hpp"

namespace chiforge::detail {

inline Json js(const VertexSet& s) { return s.to_vector(); }

using Fill = std::function<void(Certificate&)>;
using Named = std::vector<std::pair<std::string, VertexSet>>;

// Accumulates candidate outcomes against one hypothesis draft.
struct Attempt {
    Ctx& ctx;
    Certificate hyp;
    std::optional<Certificate> found;
    // Sets that may legitimately be empty in an outcome (e.g. A'_i = ∅ when
    // its lower bound is not positive).
    std::vector<std::string> may_be_empty;

    Attempt(Ctx& c, Certificate h) : ctx(c), hyp(std::move(h)) {}

    bool operator()(int bullet, const Fill& fill, const std::string& why) {
        if (found) return true;
        Certificate c = hyp;
        c.bullet = bullet;
        fill(c);
        for (const auto& [name, s] : c.sets)
            if (s.empty() && !optional_set(name)) return false;
        found = try_outcome(ctx, std::move(c), why);
        return found.has_value();
    }
    bool operator()(int bullet, const Named& sets, const std::string& why,
                    const std::vector<std::pair<std::string, Rational>>& params = {}) {
        return (*this)(
            bullet,
            [&](Certificate& c) {
                for (const auto& [n, s] : sets) c.put_set(n, s);
                for (const auto& [n, r] : params) c.put_param(n, r);
            },
            why);
    }
    bool optional_set(const std::string& name) const {
        for (const auto& p : may_be_empty)
            if (name.rfind(p, 0) == 0) return true;
        return false;
    }
    bool done() const { return found.has_value(); }
    Certificate result() {
        if (!found) throw NoOutcome(hyp.lemma + ": no candidate outcome verified");
        return *found;
    }
};

// First edge of G[S] in index order, if any.
inline std::optional<std::pair<int, int>> first_edge(const Graph& g, const VertexSet& s) {
    for (int u : s) {
        VertexSet nb = g.nbrs(u) & s;
        int w = nb.next(u + 1);
        if (w >= 0) return std::pair{u, w};
    }
    return std::nullopt;
}

inline std::optional<std::pair<int, int>> first_nonedge(const Graph& g, const VertexSet& s) {
    for (int u : s) {
        VertexSet non = s - g.closed_nbrs(u);
        int w = non.next(u + 1);
        if (w >= 0) return std::pair{u, w};
    }
    return std::nullopt;
}

// Vertices of S complete to T.
inline VertexSet complete_part(const Graph& g, const VertexSet& s, const VertexSet& t) {
    VertexSet out;
    for (int u : s)
        if (t.subset_of(g.nbrs(u))) out.insert(u);
    return out;
}

}  // namespace chiforge::detail
