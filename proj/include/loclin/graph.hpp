#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace loclin {

using vertex_t = int;
using vset = std::uint64_t;  // vertex set over ids 0..63

inline constexpr int max_order = 64;

constexpr vset bit(vertex_t v) noexcept { return vset{1} << v; }

constexpr vset prefix_mask(int n) noexcept { return n >= 64 ? ~vset{0} : (vset{1} << n) - 1; }

constexpr int popcount(vset s) noexcept { return std::popcount(s); }

constexpr vertex_t lowest(vset s) noexcept { return std::countr_zero(s); }

constexpr vertex_t highest(vset s) noexcept { return 63 - std::countl_zero(s); }

/// Calls fn(v) for every member of s in ascending order.
template <typename Fn>
constexpr void for_each_vertex(vset s, Fn&& fn) {
    while (s) {
        fn(lowest(s));
        s &= s - 1;
    }
}

inline std::vector<vertex_t> to_vector(vset s) {
    std::vector<vertex_t> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](vertex_t v) { out.push_back(v); });
    return out;
}

struct Edge {
    vertex_t u = 0;
    vertex_t v = 0;

    Edge() = default;
    Edge(vertex_t a, vertex_t b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 (n <= 64), one neighbor word per
/// vertex. Values are immutable once built; extension returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Builds from raw neighbor words after checking symmetry, loops and range.
    static Graph from_adjacency(int n, std::span<const vset> adj) {
        if (n < 0 || n > max_order)
            throw out_of_range_error("graph order " + std::to_string(n) + " outside 0..64");
        if (static_cast<int>(adj.size()) != n)
            throw malformed_input_error("adjacency row count does not match order");
        Graph g;
        g.n_ = n;
        const vset all = prefix_mask(n);
        for (int v = 0; v < n; ++v) {
            if (adj[v] & ~all)
                throw out_of_range_error("neighbor id >= n at vertex " + std::to_string(v));
            if (adj[v] & bit(v))
                throw malformed_input_error("self-loop at vertex " + std::to_string(v));
            g.adj_[v] = adj[v];
        }
        for (int v = 0; v < n; ++v)
            for_each_vertex(g.adj_[v], [&](vertex_t w) {
                if (!(g.adj_[w] & bit(v)))
                    throw malformed_input_error("asymmetric adjacency between " + std::to_string(v) +
                                                " and " + std::to_string(w));
            });
        return g;
    }

    int order() const noexcept { return n_; }

    int size() const noexcept {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
        return twice / 2;
    }

    vset vertices() const noexcept { return prefix_mask(n_); }
    vset neighbors(vertex_t v) const noexcept { return adj_[v]; }
    bool adjacent(vertex_t u, vertex_t v) const noexcept { return (adj_[u] >> v) & 1; }
    int degree(vertex_t v) const noexcept { return popcount(adj_[v]); }

    int max_degree() const noexcept {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const noexcept {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 0; v < n_; ++v)
            for_each_vertex(adj_[v] & prefix_mask(v), [&](vertex_t u) { out.emplace_back(u, v); });
        std::sort(out.begin(), out.end());
        return out;
    }

    std::span<const vset> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    /// Copy of this graph with one more vertex adjacent to `nbrs`.
    Graph with_vertex(vset nbrs) const {
        if (n_ >= max_order) throw size_limit_error("cannot extend a 64-vertex graph");
        if (nbrs & ~vertices()) throw out_of_range_error("new neighbor id >= n");
        Graph g = *this;
        const vertex_t v = g.n_++;
        g.adj_[v] = nbrs;
        for_each_vertex(nbrs, [&](vertex_t u) { g.adj_[u] |= bit(v); });
        return g;
    }

    /// Relabeled copy where vertex v becomes perm[v].
    Graph permuted(std::span<const vertex_t> perm) const {
        Graph g;
        g.n_ = n_;
        for (int v = 0; v < n_; ++v)
            for_each_vertex(adj_[v], [&](vertex_t w) { g.adj_[perm[v]] |= bit(perm[w]); });
        return g;
    }

    bool connected() const noexcept {
        if (n_ == 0) return true;
        vset seen = 1, frontier = 1;
        while (frontier) {
            vset next = 0;
            for_each_vertex(frontier, [&](vertex_t v) { next |= adj_[v]; });
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == vertices();
    }

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        if (a.n_ != b.n_) return false;
        return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
    }

private:
    int n_ = 0;
    std::array<vset, max_order> adj_{};
};

inline Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > max_order)
        throw out_of_range_error("graph order " + std::to_string(n) + " outside 0..64");
    std::array<vset, max_order> adj{};
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw out_of_range_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") has an endpoint >= n");
        if (a == b) throw malformed_input_error("self-loop at vertex " + std::to_string(a));
        if (adj[a] & bit(b))
            throw malformed_input_error("duplicate edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    return Graph::from_adjacency(n, {adj.data(), static_cast<std::size_t>(n)});
}

inline Graph graph_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return graph_from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

struct InducedSubgraph {
    Graph graph;
    std::vector<vertex_t> original;  // new id -> original id, ascending
};

/// G[S]; new ids follow ascending original ids.
inline InducedSubgraph induced_subgraph(const Graph& g, vset s) {
    if (s & ~g.vertices()) throw out_of_range_error("induced set contains id >= n");
    InducedSubgraph out;
    out.original = to_vector(s);
    const int k = static_cast<int>(out.original.size());
    std::array<vset, max_order> adj{};
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (g.adjacent(out.original[i], out.original[j])) adj[i] |= bit(j);
    out.graph = Graph::from_adjacency(k, {adj.data(), static_cast<std::size_t>(k)});
    return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const vertex_t> s) {
    vset mask = 0;
    for (vertex_t v : s) {
        if (v < 0 || v >= g.order()) throw out_of_range_error("induced set contains id >= n");
        mask |= bit(v);
    }
    return induced_subgraph(g, mask);
}

namespace named {

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return graph_from_edges(n, e);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return graph_from_edges(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(n - 1, 0);
    return graph_from_edges(n, e);
}

inline Graph empty(int n) { return graph_from_edges(n, std::span<const std::pair<int, int>>{}); }

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return graph_from_edges(a + b, e);
}

/// K4 minus the edge {2,3}: vertices 0 and 1 have degree 3.
inline Graph diamond() { return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

inline Graph octahedron() {
    return graph_from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

inline Graph petersen() {
    return graph_from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                 {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace named

}  // namespace loclin
