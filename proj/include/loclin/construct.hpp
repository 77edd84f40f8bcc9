#pragma once

// Edge identification of locally traceable graphs and the triangle chain built
// from it.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "canon.hpp"
#include "graph.hpp"
#include "hamilton.hpp"
#include "local.hpp"

namespace loclin {

/// Edge uv with a Hamilton path of G[N(u)] ending at v and one of G[N(v)]
/// ending at u (both stored in the graph's own ids).
struct SuitableEdge {
    Edge edge;
    std::vector<vertex_t> path_at_u;  // spans N(edge.u), ends at edge.v
    std::vector<vertex_t> path_at_v;  // spans N(edge.v), ends at edge.u
};

namespace detail {

// Hamilton path of G[N(center)] whose last vertex is `end`, in original ids.
inline std::optional<std::vector<vertex_t>> neighborhood_path_ending_at(const Graph& g, vertex_t center,
                                                                        vertex_t end) {
    const auto sub = induced_subgraph(g, g.neighbors(center));
    const auto it = std::find(sub.original.begin(), sub.original.end(), end);
    if (it == sub.original.end()) return std::nullopt;
    auto cert = find_hamilton_path_from(sub.graph, static_cast<vertex_t>(it - sub.original.begin()));
    if (!cert) return std::nullopt;
    std::vector<vertex_t> out;
    for (auto i = cert->seq.rbegin(); i != cert->seq.rend(); ++i) out.push_back(sub.original[*i]);
    return out;
}

inline bool valid_neighborhood_witness(const Graph& g, vertex_t center, vertex_t end,
                                       const std::vector<vertex_t>& path) {
    if (path.empty() || path.back() != end) return false;
    vset seen = 0;
    for (vertex_t v : path) {
        if (v < 0 || v >= g.order() || !g.adjacent(center, v) || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    if (seen != g.neighbors(center)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) return false;
    return true;
}

}  // namespace detail

inline std::optional<SuitableEdge> suitable_edge(const Graph& g, Edge e) {
    if (e.u < 0 || e.v >= g.order()) throw out_of_range_error("edge endpoint >= n");
    if (!g.adjacent(e.u, e.v)) return std::nullopt;
    auto at_u = detail::neighborhood_path_ending_at(g, e.u, e.v);
    if (!at_u) return std::nullopt;
    auto at_v = detail::neighborhood_path_ending_at(g, e.v, e.u);
    if (!at_v) return std::nullopt;
    return SuitableEdge{e, std::move(*at_u), std::move(*at_v)};
}

/// Every suitable edge of g, ascending by (u, v).
inline std::vector<SuitableEdge> suitable_edges(const Graph& g) {
    std::vector<SuitableEdge> out;
    for (const Edge& e : g.edges())
        if (auto s = suitable_edge(g, e)) out.push_back(std::move(*s));
    return out;
}

inline bool is_valid_suitable_edge(const Graph& g, const SuitableEdge& s) {
    const Edge& e = s.edge;
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    return detail::valid_neighborhood_witness(g, e.u, e.v, s.path_at_u) &&
           detail::valid_neighborhood_witness(g, e.v, e.u, s.path_at_v);
}

/// Which endpoint of the second edge merges with the first edge's `u`.
enum class Orientation { u_to_u, u_to_v };

/// Glues g2 onto g1 along the two suitable edges. The identified pair keeps
/// g1's ids; g2's other vertices follow in ascending order.
inline Graph edge_identify(const Graph& g1, const SuitableEdge& e1, const Graph& g2, const SuitableEdge& e2,
                           Orientation orientation = Orientation::u_to_u) {
    if (g1.order() < 3 || g2.order() < 3)
        throw precondition_error("edge identification needs both graphs of order >= 3");
    if (!is_valid_suitable_edge(g1, e1)) throw precondition_error("first edge is not suitable");
    if (!is_valid_suitable_edge(g2, e2)) throw precondition_error("second edge is not suitable");
    const int n = g1.order() + g2.order() - 2;
    if (n > max_order) throw size_limit_error("identified graph exceeds 64 vertices");

    std::vector<vertex_t> map2(g2.order(), -1);
    if (orientation == Orientation::u_to_u) {
        map2[e2.edge.u] = e1.edge.u;
        map2[e2.edge.v] = e1.edge.v;
    } else {
        map2[e2.edge.v] = e1.edge.u;
        map2[e2.edge.u] = e1.edge.v;
    }
    vertex_t next = g1.order();
    for (vertex_t v = 0; v < g2.order(); ++v)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g1.edges()) edges.emplace_back(e.u, e.v);
    for (const Edge& e : g2.edges()) {
        const Edge mapped(map2[e.u], map2[e.v]);
        if (mapped == e1.edge) continue;  // the identified edge is kept once
        edges.emplace_back(mapped.u, mapped.v);
    }
    return graph_from_edges(n, edges);
}

struct ChainSpec {
    Graph seed;
    Edge start_edge;
    int steps = 0;
};

struct ChainLink {
    int step = 0;       // 1-based
    Graph graph;
    Edge glued;         // edge of the previous graph the triangle was glued onto
    vertex_t added = 0; // the new degree-two vertex
    bool locally_linear = false;
    bool hamiltonian = false;
    bool oracle_checked = false;  // hamiltonicity also decided by the subset DP
};

struct ChainOptions {
    int oracle_max_order = 20;       // DP cross-check up to this order
    bool solver_check_all = true;    // run the backtracking solver at every order
};

namespace detail {

inline void require_chain_seed(const Graph& seed) {
    if (!seed.connected()) throw precondition_error("chain seed is disconnected");
    if (auto ll = is_locally_linear(seed); !ll)
        throw precondition_error("chain seed is not locally linear at vertex " + std::to_string(*ll.violator));
    if (is_hamiltonian(seed)) throw precondition_error("chain seed is hamiltonian");
}

// In the triangle {added, a, b} glued last, the next edge joins the degree-two
// vertex `added` to whichever of a, b now has degree three.
inline std::optional<Edge> next_chain_edge(const Graph& g, vertex_t added, Edge glued) {
    if (g.degree(added) != 2) return std::nullopt;
    for (vertex_t w : {glued.u, glued.v})
        if (g.degree(w) == 3) return Edge(added, w);
    return std::nullopt;
}

}  // namespace detail

/// Glues k fresh triangles one after another, validating every step.
inline std::vector<ChainLink> attach_triangle_chain(const ChainSpec& spec, const ChainOptions& opts = {}) {
    if (spec.steps < 0) throw precondition_error("chain step count is negative");
    if (spec.seed.order() + spec.steps > max_order) throw size_limit_error("chain would exceed 64 vertices");
    std::vector<ChainLink> out;
    if (spec.steps == 0) return out;
    detail::require_chain_seed(spec.seed);

    const Graph triangle = named::complete(3);
    const SuitableEdge tri_edge = *suitable_edge(triangle, Edge(0, 1));
    const int seed_m = spec.seed.size();

    Graph cur = spec.seed;
    Edge edge = spec.start_edge;
    for (int step = 1; step <= spec.steps; ++step) {
        if (step > 1) {
            const ChainLink& prev = out.back();
            auto e = detail::next_chain_edge(cur, prev.added, prev.glued);
            if (!e) throw construction_error(step, "last triangle has no degree-two/degree-three edge");
            edge = *e;
        }
        auto s = suitable_edge(cur, edge);
        if (!s) throw construction_error(step, "edge (" + std::to_string(edge.u) + "," +
                                                   std::to_string(edge.v) + ") is not suitable");
        Graph next = edge_identify(cur, *s, triangle, tri_edge);

        ChainLink link;
        link.step = step;
        link.glued = edge;
        link.added = next.order() - 1;
        if (next.order() != cur.order() + 1) throw construction_error(step, "order did not grow by one");
        if (next.size() != cur.size() + 2) throw construction_error(step, "size did not grow by two");
        if (next.size() != seed_m + 2 * step) throw construction_error(step, "size drifted from seed + 2k");
        if (!next.connected()) throw construction_error(step, "disconnected");
        link.locally_linear = static_cast<bool>(is_locally_linear(next));
        if (!link.locally_linear) throw construction_error(step, "not locally linear");
        if (next.order() <= opts.oracle_max_order || opts.solver_check_all) {
            link.hamiltonian = is_hamiltonian(next);
            if (next.order() <= opts.oracle_max_order && next.order() <= 24) {
                link.oracle_checked = true;
                if (hamiltonicity_oracle(next) != link.hamiltonian)
                    throw construction_error(step, "solver and subset DP disagree on hamiltonicity");
            }
            if (link.hamiltonian) throw construction_error(step, "hamiltonian");
        }
        link.graph = next;
        out.push_back(std::move(link));
        cur = std::move(next);
    }
    return out;
}

/// Suitable edges of the seed ordered by their canonical labels, keeping those
/// from which a three-step chain validates.
inline std::vector<Edge> chain_start_candidates(const Graph& seed) {
    detail::require_chain_seed(seed);
    const auto canon = canonical_form(seed);
    std::vector<std::pair<Edge, Edge>> keyed;  // canonical edge, original edge
    for (const auto& s : suitable_edges(seed))
        keyed.emplace_back(Edge(canon.relabel[s.edge.u], canon.relabel[s.edge.v]), s.edge);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Edge> out;
    const int steps = std::min(3, max_order - seed.order());
    for (const auto& [key, e] : keyed) {
        try {
            attach_triangle_chain({seed, e, steps}, {.oracle_max_order = 20, .solver_check_all = true});
            out.push_back(e);
        } catch (const construction_error&) {
        }
    }
    return out;
}

/// Canonically least suitable edge from which a three-step chain validates.
inline std::optional<Edge> find_chain_start(const Graph& seed) {
    auto all = chain_start_candidates(seed);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace loclin
