#pragma once

// Independent oracles and fixtures shared by the test binaries. Nothing here
// calls the library's search or canonical labeling; the point is to check
// those against definitions.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "loclin/graph.hpp"
#include "loclin/graph6.hpp"
#include "loclin/search.hpp"

namespace testing_support {

using namespace loclin;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x10c11e5ULL);
    return gen;
}

inline Graph random_graph(int n, double p, std::mt19937_64& r = rng()) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(r)) edges.emplace_back(i, j);
    return graph_from_edges(n, edges);
}

inline std::vector<vertex_t> random_permutation(int n, std::mt19937_64& r = rng()) {
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), r);
    return p;
}

// Graph on n labeled vertices whose edge slot k (column order) is bit k of mask.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) edges.emplace_back(i, j);
    return graph_from_edges(n, edges);
}

inline int slots(int n) { return n * (n - 1) / 2; }

// Least graph6 string over all n! labelings.
inline std::string brute_min_form(const Graph& g) {
    std::vector<vertex_t> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        auto s = emit_graph6(g.permuted(p));
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<vertex_t> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (a.permuted(p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Hamilton cycle / path by trying every vertex order.
inline bool brute_hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = g.adjacent(p[n - 1], p[0]);
        for (int i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(p[i], p[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return false;
}

inline bool brute_traceable(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(p[i], p[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// G[S] is a path: |S| <= 1, or connected with |S| - 1 edges and degrees <= 2.
inline bool induces_path(const Graph& g, const std::vector<vertex_t>& s) {
    const int k = static_cast<int>(s.size());
    if (k <= 1) return true;
    int edges = 0;
    for (int i = 0; i < k; ++i) {
        int d = 0;
        for (int j = 0; j < k; ++j) d += i != j && g.adjacent(s[i], s[j]);
        if (d > 2) return false;
        edges += d;
    }
    if (edges / 2 != k - 1) return false;
    std::vector<char> seen(k, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < k; ++j)
            if (!seen[j] && g.adjacent(s[i], s[j])) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
    }
    return count == k;
}

inline std::vector<vertex_t> neighbor_list(const Graph& g, vertex_t v) {
    std::vector<vertex_t> out;
    for (vertex_t w = 0; w < g.order(); ++w)
        if (g.adjacent(v, w)) out.push_back(w);
    return out;
}

inline bool locally_linear_by_definition(const Graph& g) {
    for (vertex_t v = 0; v < g.order(); ++v)
        if (!induces_path(g, neighbor_list(g, v))) return false;
    return true;
}

// Triangles through uv by scanning every third vertex.
inline int triangles_through(const Graph& g, vertex_t u, vertex_t v) {
    int t = 0;
    for (vertex_t w = 0; w < g.order(); ++w) t += w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w);
    return t;
}

inline long triangles_by_triples(const Graph& g) {
    long t = 0;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) t += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    return t;
}

inline int brute_independence(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            if ((s >> i) & 1) ok = (g.neighbors(i) & s) == 0;
        if (ok) best = std::max(best, popcount(s));
    }
    return best;
}

// Connected locally linear classes of order n, generated once per process.
inline const std::vector<Graph>& corpus(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    SearchConstraints c;
    c.n = n;
    enumerate_locally_linear(c, [&](const Graph& g) { out.push_back(g); });
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace testing_support
