#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "hamilton.hpp"

namespace loclin {

/// Ordering v1..vt of N(center) in which G[N(center)] is an induced path.
struct NeighborhoodPath {
    vertex_t center = 0;
    std::vector<vertex_t> order;

    vertex_t front() const { return order.front(); }
    vertex_t back() const { return order.back(); }
};

namespace detail {

/// Orders `s` as an induced path of g, starting from its smaller endpoint.
/// Sets of size 0 and 1 are paths; anything else needs exactly |s|-1 edges,
/// inner degree <= 2 and connectivity.
inline std::optional<std::vector<vertex_t>> induced_path_order(const Graph& g, vset s) {
    const int k = popcount(s);
    if (k <= 1) return to_vector(s);
    int twice_edges = 0;
    vertex_t first_end = -1;
    int ends = 0;
    bool bad = false;
    for_each_vertex(s, [&](vertex_t v) {
        const int d = popcount(g.neighbors(v) & s);
        twice_edges += d;
        if (d == 0 || d > 2) bad = true;
        if (d == 1) {
            if (first_end < 0) first_end = v;
            ++ends;
        }
    });
    if (bad || ends != 2 || twice_edges != 2 * (k - 1)) return std::nullopt;
    std::vector<vertex_t> order{first_end};
    vset seen = bit(first_end);
    vertex_t cur = first_end;
    while (true) {
        const vset next = g.neighbors(cur) & s & ~seen;
        if (!next) break;
        cur = lowest(next);
        seen |= bit(cur);
        order.push_back(cur);
    }
    if (static_cast<int>(order.size()) != k) return std::nullopt;  // a path plus disjoint cycles
    return order;
}

inline bool is_induced_path(const Graph& g, vset s) { return induced_path_order(g, s).has_value(); }

}  // namespace detail

inline std::optional<NeighborhoodPath> neighborhood_path(const Graph& g, vertex_t v) {
    if (v < 0 || v >= g.order()) throw out_of_range_error("vertex id >= n");
    auto order = detail::induced_path_order(g, g.neighbors(v));
    if (!order) return std::nullopt;
    return NeighborhoodPath{v, std::move(*order)};
}

struct LocalLinearity {
    bool ok = true;
    std::optional<vertex_t> violator;

    explicit operator bool() const { return ok; }
};

inline LocalLinearity is_locally_linear(const Graph& g) {
    for (vertex_t v = 0; v < g.order(); ++v)
        if (!detail::is_induced_path(g, g.neighbors(v))) return {false, v};
    return {};
}

/// The empty neighborhood of an isolated vertex is treated as a (trivially
/// traceable) path on zero vertices.
inline bool is_locally_traceable(const Graph& g) {
    for (vertex_t v = 0; v < g.order(); ++v) {
        if (!g.neighbors(v)) continue;
        if (!find_hamilton_path(induced_subgraph(g, g.neighbors(v)).graph)) return false;
    }
    return true;
}

inline bool is_locally_hamiltonian(const Graph& g) {
    for (vertex_t v = 0; v < g.order(); ++v)
        if (!find_hamilton_cycle(induced_subgraph(g, g.neighbors(v)).graph)) return false;
    return true;
}

inline int edge_triangles(const Graph& g, vertex_t u, vertex_t v) {
    return popcount(g.neighbors(u) & g.neighbors(v));
}

/// t(e) for every edge e.
inline std::map<Edge, int> edge_triangle_classes(const Graph& g) {
    std::map<Edge, int> out;
    for (const Edge& e : g.edges()) out.emplace(e, edge_triangles(g, e.u, e.v));
    return out;
}

inline long triangle_count(const Graph& g) {
    long t = 0;
    for (const Edge& e : g.edges()) t += edge_triangles(g, e.u, e.v);
    return t / 3;
}

namespace detail {

inline void max_independent(const Graph& g, vset rest, int size, int& best) {
    if (size + popcount(rest) <= best) return;
    if (!rest) {
        best = size;
        return;
    }
    vertex_t pick = -1;
    int pick_deg = -1;
    for_each_vertex(rest, [&](vertex_t v) {
        const int d = popcount(g.neighbors(v) & rest);
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    });
    if (pick_deg == 0) {
        best = std::max(best, size + popcount(rest));
        return;
    }
    max_independent(g, rest & ~bit(pick) & ~g.neighbors(pick), size + 1, best);
    max_independent(g, rest & ~bit(pick), size, best);
}

}  // namespace detail

inline int independence_number(const Graph& g) {
    if (g.order() > 32) throw size_limit_error("independence number supports n <= 32");
    int best = 0;
    detail::max_independent(g, g.vertices(), 0, best);
    return best;
}

inline bool is_two_connected(const Graph& g) {
    if (g.order() < 3 || !g.connected()) return false;
    for (vertex_t v = 0; v < g.order(); ++v)
        if (!detail::connected_within(g, g.vertices() & ~bit(v))) return false;
    return true;
}

inline bool is_diamond(const Graph& g, vset four) {
    if (popcount(four) != 4) return false;
    int twice = 0;
    for_each_vertex(four, [&](vertex_t v) { twice += popcount(g.neighbors(v) & four); });
    return twice == 10;
}

using Counterexample = std::variant<std::monostate, vertex_t, Edge, std::vector<vertex_t>>;

struct CheckResult {
    std::string name;
    bool pass = true;
    Counterexample counterexample;
};

struct InvariantReport {
    bool precondition_met = true;
    std::string precondition_failure;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        if (!precondition_met) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace check_names {
inline constexpr const char* edge_triangles = "edge_triangles_one_or_two";
inline constexpr const char* one_edges = "two_one_edges_per_vertex";
inline constexpr const char* triangle_identity = "triangle_identity";
inline constexpr const char* min_degree = "min_degree_at_least_two";
inline constexpr const char* two_connected = "two_connected";
inline constexpr const char* independence = "neighborhood_independence_bound";
inline constexpr const char* contained_neighborhood = "contained_neighborhood_spans_path_edge";
inline constexpr const char* contained_edge = "contained_edge_forms_diamond";
}  // namespace check_names

namespace detail {

// Non-neighbor v of u with N(v) inside N(u) must see two consecutive path vertices.
inline Counterexample contained_neighborhood_violation(const Graph& g,
                                                       const std::vector<NeighborhoodPath>& paths) {
    for (vertex_t u = 0; u < g.order(); ++u) {
        const vset closed = g.neighbors(u) | bit(u);
        const auto& ord = paths[u].order;
        for (vertex_t v = 0; v < g.order(); ++v) {
            if (closed & bit(v)) continue;
            if (g.neighbors(v) & ~g.neighbors(u)) continue;
            bool found = false;
            for (std::size_t i = 0; i + 1 < ord.size() && !found; ++i)
                found = g.adjacent(v, ord[i]) && g.adjacent(v, ord[i + 1]);
            if (!found) return std::vector<vertex_t>{u, v};
        }
    }
    return {};
}

// Edge xy away from N[u] whose joint neighborhood lies in N(u) must form a
// diamond with some consecutive pair of u's path.
inline Counterexample contained_edge_violation(const Graph& g, const std::vector<NeighborhoodPath>& paths) {
    for (vertex_t u = 0; u < g.order(); ++u) {
        const vset closed = g.neighbors(u) | bit(u);
        const auto& ord = paths[u].order;
        for (const Edge& e : g.edges()) {
            if ((closed & bit(e.u)) || (closed & bit(e.v))) continue;
            const vset joint = (g.neighbors(e.u) | g.neighbors(e.v)) & ~bit(e.u) & ~bit(e.v);
            if (joint & ~g.neighbors(u)) continue;
            bool found = false;
            for (std::size_t i = 0; i + 1 < ord.size() && !found; ++i)
                found = is_diamond(g, bit(ord[i]) | bit(ord[i + 1]) | bit(e.u) | bit(e.v));
            if (!found) return std::vector<vertex_t>{u, e.u, e.v};
        }
    }
    return {};
}

}  // namespace detail

/// Runs the locally-linear invariant suite. Requires a connected locally
/// linear graph on at least 3 vertices; otherwise only the precondition
/// failure is reported.
inline InvariantReport check_local_linear_invariants(const Graph& g) {
    InvariantReport report;
    const int n = g.order();
    if (n < 3) {
        report.precondition_met = false;
        report.precondition_failure = "order below 3";
        return report;
    }
    if (!g.connected()) {
        report.precondition_met = false;
        report.precondition_failure = "graph is disconnected";
        return report;
    }
    std::vector<NeighborhoodPath> paths;
    paths.reserve(n);
    for (vertex_t v = 0; v < n; ++v) {
        auto p = neighborhood_path(g, v);
        if (!p) {
            report.precondition_met = false;
            report.precondition_failure = "not locally linear at vertex " + std::to_string(v);
            return report;
        }
        paths.push_back(std::move(*p));
    }

    const auto edges = g.edges();
    const long m = static_cast<long>(edges.size());

    {
        CheckResult c{check_names::edge_triangles, true, {}};
        for (const Edge& e : edges) {
            const int t = edge_triangles(g, e.u, e.v);
            if (t < 1 || t > 2) {
                c.pass = false;
                c.counterexample = e;
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{check_names::one_edges, true, {}};
        for (vertex_t v = 0; v < n && c.pass; ++v) {
            int ones = 0;
            for_each_vertex(g.neighbors(v), [&](vertex_t w) { ones += edge_triangles(g, v, w) == 1; });
            if (ones != 2) {
                c.pass = false;
                c.counterexample = v;
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        const long t = triangle_count(g);
        CheckResult c{check_names::triangle_identity, 3 * t + n == 2 * m && (m - 2L * n) % 3 == 0, {}};
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{check_names::min_degree, true, {}};
        for (vertex_t v = 0; v < n && c.pass; ++v)
            if (g.degree(v) < 2) {
                c.pass = false;
                c.counterexample = v;
            }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{check_names::two_connected, true, {}};
        for (vertex_t v = 0; v < n && c.pass; ++v)
            if (!detail::connected_within(g, g.vertices() & ~bit(v))) {
                c.pass = false;
                c.counterexample = v;  // cut vertex
            }
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{check_names::independence, true, {}};
        for (vertex_t v = 0; v < n && c.pass; ++v) {
            const int t = g.degree(v);
            if (independence_number(induced_subgraph(g, g.neighbors(v)).graph) > (t + 1) / 2) {
                c.pass = false;
                c.counterexample = v;
            }
        }
        report.checks.push_back(std::move(c));
    }
    {
        auto ce = detail::contained_neighborhood_violation(g, paths);
        const bool pass = std::holds_alternative<std::monostate>(ce);
        report.checks.push_back({check_names::contained_neighborhood, pass, std::move(ce)});
    }
    {
        auto ce = detail::contained_edge_violation(g, paths);
        const bool pass = std::holds_alternative<std::monostate>(ce);
        report.checks.push_back({check_names::contained_edge, pass, std::move(ce)});
    }
    return report;
}

}  // namespace loclin
