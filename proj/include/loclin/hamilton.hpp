#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace loclin {

struct Certificate {
    enum class Kind { cycle, path };

    Kind kind = Kind::cycle;
    std::vector<vertex_t> seq;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Checks a certificate against g from scratch.
inline bool verify_certificate(const Graph& g, const Certificate& c) {
    const int n = g.order();
    if (static_cast<int>(c.seq.size()) != n) return false;
    vset seen = 0;
    for (vertex_t v : c.seq) {
        if (v < 0 || v >= n || (seen & bit(v))) return false;
        seen |= bit(v);
    }
    for (std::size_t i = 0; i + 1 < c.seq.size(); ++i)
        if (!g.adjacent(c.seq[i], c.seq[i + 1])) return false;
    if (c.kind == Certificate::Kind::cycle) {
        if (n < 3) return false;
        if (!g.adjacent(c.seq.back(), c.seq.front())) return false;
    } else if (n == 0) {
        return false;
    }
    return true;
}

namespace detail {

inline bool connected_within(const Graph& g, vset region) {
    if (!region) return true;
    vset seen = bit(lowest(region)), frontier = seen;
    while (frontier) {
        vset next = 0;
        for_each_vertex(frontier, [&](vertex_t v) { next |= g.neighbors(v); });
        next &= region & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == region;
}

// Depth-first extension of a path from `start`. In cycle mode the last vertex
// must close back to start. Prunes on usable degree (neighbors still able to
// sit next to a vertex on the final route), forced moves through vertices of
// usable degree two, and disconnection of the unvisited region.
class HamiltonBacktrack {
public:
    HamiltonBacktrack(const Graph& g, bool cycle) : g_(g), n_(g.order()), cycle_(cycle) {}

    std::optional<std::vector<vertex_t>> from(vertex_t start) {
        path_.clear();
        path_.push_back(start);
        if (extend(g_.vertices() & ~bit(start))) return path_;
        return std::nullopt;
    }

private:
    std::vector<vertex_t> ordered(vset s) const {
        std::vector<vertex_t> out = to_vector(s);
        std::stable_sort(out.begin(), out.end(),
                         [&](vertex_t a, vertex_t b) { return g_.degree(a) < g_.degree(b); });
        return out;
    }

    bool extend(vset unvisited) {
        const vertex_t end = path_.back();
        const vertex_t start = path_.front();
        if (!unvisited) return !cycle_ || (n_ >= 3 && g_.adjacent(end, start));

        vset moves = g_.neighbors(end) & unvisited;
        if (!moves) return false;
        if (!detail::connected_within(g_, unvisited)) return false;

        // endpoints that unvisited vertices may still attach to
        vset anchors = bit(end);
        if (cycle_ && path_.size() > 1) anchors |= bit(start);
        const vset usable_pool = unvisited | anchors;

        vset forced_from_end = 0;
        int forced_into_start = 0;
        int short_ends = 0;
        bool dead = false;
        for_each_vertex(unvisited, [&](vertex_t w) {
            if (dead) return;
            const vset usable = g_.neighbors(w) & usable_pool;
            const int k = popcount(usable);
            if (cycle_) {
                if (k < 2) {
                    // only the last unvisited vertex closes on start itself
                    if (!(path_.size() == 1 && unvisited == bit(w) && k == 1)) dead = true;
                    return;
                }
                if (k == 2) {
                    if (usable & bit(end)) forced_from_end |= bit(w);
                    if (path_.size() > 1 && (usable & bit(start))) ++forced_into_start;
                }
            } else {
                if (k == 0) {
                    dead = true;
                } else if (k == 1) {
                    if (++short_ends > 1) dead = true;
                }
            }
        });
        if (dead) return false;
        if (cycle_) {
            // end still has one free cycle slot, or two while the path is a single vertex
            const int end_slots = path_.size() == 1 ? 2 : 1;
            if (popcount(forced_from_end) > end_slots) return false;
            if (forced_into_start > 1) return false;
            if (path_.size() > 1 && !(g_.neighbors(start) & unvisited)) return false;
            if (forced_from_end) moves &= forced_from_end;
        }

        for (vertex_t w : ordered(moves)) {
            path_.push_back(w);
            if (extend(unvisited & ~bit(w))) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int n_;
    bool cycle_;
    std::vector<vertex_t> path_;
};

inline vertex_t min_degree_vertex(const Graph& g) {
    vertex_t best = 0;
    for (vertex_t v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

}  // namespace detail

/// Exact: an empty result means the exhaustive search found no Hamilton cycle.
inline std::optional<Certificate> find_hamilton_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3 || g.min_degree() < 2 || !g.connected()) return std::nullopt;
    detail::HamiltonBacktrack bt(g, true);
    if (auto seq = bt.from(detail::min_degree_vertex(g)))
        return Certificate{Certificate::Kind::cycle, std::move(*seq)};
    return std::nullopt;
}

inline std::optional<Certificate> find_hamilton_path(const Graph& g) {
    const int n = g.order();
    if (n == 0 || !g.connected()) return std::nullopt;
    if (n == 1) return Certificate{Certificate::Kind::path, {0}};

    std::vector<vertex_t> leaves, starts;
    for (vertex_t v = 0; v < n; ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    if (leaves.size() > 2) return std::nullopt;
    if (!leaves.empty()) {
        starts = {leaves.front()};
    } else {
        if (auto c = find_hamilton_cycle(g)) return Certificate{Certificate::Kind::path, c->seq};
        starts = to_vector(g.vertices());
        std::stable_sort(starts.begin(), starts.end(),
                         [&](vertex_t a, vertex_t b) { return g.degree(a) < g.degree(b); });
    }
    detail::HamiltonBacktrack bt(g, false);
    for (vertex_t s : starts)
        if (auto seq = bt.from(s)) return Certificate{Certificate::Kind::path, std::move(*seq)};
    return std::nullopt;
}

/// Hamilton path that starts at `start`, if any.
inline std::optional<Certificate> find_hamilton_path_from(const Graph& g, vertex_t start) {
    if (start < 0 || start >= g.order()) throw out_of_range_error("vertex id >= n");
    if (!g.connected()) return std::nullopt;
    detail::HamiltonBacktrack bt(g, false);
    if (auto seq = bt.from(start)) return Certificate{Certificate::Kind::path, std::move(*seq)};
    return std::nullopt;
}

inline bool is_hamiltonian(const Graph& g) { return find_hamilton_cycle(g).has_value(); }
inline bool is_traceable(const Graph& g) { return find_hamilton_path(g).has_value(); }

/// Held-Karp style subset DP over (visited set, endpoint) from vertex 0.
/// Independent of the backtracking solver; used to cross-check it.
inline bool hamiltonicity_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw size_limit_error("hamiltonicity oracle supports n <= 24");
    if (n < 3) return false;
    const int others = n - 1;  // vertices 1..n-1 map to bits 0..n-2
    std::vector<std::uint32_t> ends(std::size_t{1} << others, 0);
    auto nb = [&](vertex_t v) { return static_cast<std::uint32_t>(g.neighbors(v) >> 1); };
    for (int v = 1; v < n; ++v)
        if (g.adjacent(0, v)) ends[std::size_t{1} << (v - 1)] |= 1u << (v - 1);
    const std::size_t full = (std::size_t{1} << others) - 1;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t e = ends[mask];
        if (!e) continue;
        for (int v = 0; v < others; ++v) {
            if (!(e >> v & 1)) continue;
            std::uint32_t next = nb(v + 1) & ~static_cast<std::uint32_t>(mask);
            while (next) {
                const int w = std::countr_zero(next);
                next &= next - 1;
                ends[mask | (std::size_t{1} << w)] |= 1u << w;
            }
        }
    }
    return (ends[full] & nb(0)) != 0;
}

/// Every vertex on a triangle, and every vertex set spanned by a cycle (other
/// than V) grows by one vertex into another cycle-spanned set.
inline bool is_fully_cycle_extendable(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw size_limit_error("fully-cycle-extendable check supports n <= 16");
    for (vertex_t v = 0; v < n; ++v) {
        bool on_triangle = false;
        for_each_vertex(g.neighbors(v), [&](vertex_t u) {
            if (g.neighbors(u) & g.neighbors(v)) on_triangle = true;
        });
        if (!on_triangle) return false;
    }
    if (n < 3) return true;

    // reach[mask]: endpoints of paths that start at lowest(mask) and cover mask
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint16_t> reach(total, 0);
    std::vector<char> cyclable(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const vertex_t s = lowest(mask);
        if (mask == bit(s)) {
            reach[mask] = static_cast<std::uint16_t>(bit(s));
            continue;
        }
        std::uint16_t r = 0;
        for_each_vertex(mask & ~bit(s), [&](vertex_t v) {
            if (reach[mask ^ bit(v)] & g.neighbors(v)) r |= static_cast<std::uint16_t>(bit(v));
        });
        reach[mask] = r;
        cyclable[mask] = popcount(mask) >= 3 && (r & g.neighbors(s)) != 0;
    }
    const std::size_t full = total - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!cyclable[mask]) continue;
        bool extends = false;
        for_each_vertex(full & ~mask, [&](vertex_t w) {
            if (cyclable[mask | bit(w)]) extends = true;
        });
        if (!extends) return false;
    }
    return true;
}

}  // namespace loclin
