#pragma once

// Isomorph-free generation of connected locally linear graphs.
//
// Orderly generation over canonical (lexicographically greatest, see canon.hpp)
// labelings: a canonical graph on k vertices is extended by vertex k with a
// neighbor set S, and the child is kept only if its own labeling is canonical.
// Deleting the last vertex of a canonical graph leaves its canonical parent, so
// every isomorphism class is produced exactly once.
//
// Canonical labelings of connected graphs are breadth-first: the smallest
// earlier neighbor f(j) of vertex j never decreases. Once vertex k is added with
// f(k) = f, every vertex below f is finished (no later vertex can touch it), so
// its neighborhood must already be an induced path. Unfinished vertices only need
// their neighborhoods to be linear forests, which is hereditary.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "canon.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "hamilton.hpp"
#include "local.hpp"

namespace loclin {

enum class Requirement : unsigned { connected = 1, nonhamiltonian = 2, nontraceable = 4 };

struct SearchConstraints {
    int n = 0;
    std::optional<int> m_max;
    std::optional<int> delta_max;
    unsigned require = static_cast<unsigned>(Requirement::connected);

    bool needs(Requirement r) const { return require & static_cast<unsigned>(r); }
    SearchConstraints& add(Requirement r) {
        require |= static_cast<unsigned>(r);
        return *this;
    }
};

struct SearchOptions {
    int workers = 1;
    int split_depth = -1;                       // < 0 picks a depth from n
    std::uint64_t budget_nodes = 20'000'000'000ULL;
};

struct Witness {
    Graph graph;
    std::string graph6;
    int m = 0;
    int delta = 0;
    bool hamiltonian = false;
    bool traceable = false;
    bool oracle_nonhamiltonian = false;         // subset DP agrees the graph is nonhamiltonian
    std::optional<Certificate> certificate;     // Hamilton path when traceable
};

struct SearchReport {
    SearchConstraints constraints;
    std::uint64_t classes = 0;                  // classes meeting n, m_max and delta_max
    std::uint64_t nonhamiltonian = 0;
    std::uint64_t nontraceable = 0;
    std::uint64_t delivered = 0;                // classes also meeting `require`
    std::map<int, std::uint64_t> by_size;       // m -> classes
    std::map<int, std::uint64_t> nonhamiltonian_by_size;
    std::vector<Witness> witnesses;             // delivered classes when require asks for non-hamiltonicity
    std::uint64_t nodes = 0;                    // canonical search nodes visited
    double seconds = 0;
    int workers = 1;
    int split_depth = 0;
    bool complete = false;
};

class budget_error : public error {
public:
    explicit budget_error(SearchReport partial)
        : error("search node budget exhausted after " + std::to_string(partial.nodes) + " nodes"),
          partial_(std::move(partial)) {}

    const SearchReport& partial() const noexcept { return partial_; }

private:
    SearchReport partial_;
};

using GraphSink = std::function<void(const Graph&)>;

namespace detail {

struct FoundGraph {
    Graph graph;
    bool hamiltonian = false;
    bool traceable = true;
    std::optional<Certificate> path;
};

// Mutable generation state: vertices 0..k-1 of a canonical partial graph.
struct PartialGraph {
    int k = 0;
    int m = 0;
    std::array<vset, 16> adj{};
    std::array<int, 16> first{};  // smallest neighbor id, -1 for vertex 0

    Graph to_graph() const {
        return Graph::from_adjacency(k, {adj.data(), static_cast<std::size_t>(k)});
    }
};

inline constexpr int max_search_order = 16;

// Number of components of G[s] when G[s] is a linear forest, else -1.
inline int linear_forest_components(const std::array<vset, 16>& adj, vset s) {
    int edges2 = 0;
    bool bad = false;
    for_each_vertex(s, [&](vertex_t v) {
        const int d = popcount(adj[v] & s);
        if (d > 2) bad = true;
        edges2 += d;
    });
    if (bad) return -1;
    const int vertices = popcount(s);
    const int components = vertices - edges2 / 2;  // valid when acyclic
    // acyclicity: walk every component
    vset seen = 0;
    int walked = 0;
    for_each_vertex(s, [&](vertex_t v) {
        if (bad || (seen & bit(v))) return;
        vset comp = bit(v), frontier = comp;
        while (frontier) {
            vset next = 0;
            for_each_vertex(frontier, [&](vertex_t w) { next |= adj[w] & s; });
            frontier = next & ~comp;
            comp |= next;
        }
        int ce2 = 0;
        for_each_vertex(comp, [&](vertex_t w) { ce2 += popcount(adj[w] & comp); });
        if (ce2 / 2 != popcount(comp) - 1) bad = true;
        seen |= comp;
        ++walked;
    });
    if (bad) return -1;
    return walked == components ? components : -1;
}

inline bool single_induced_path(const std::array<vset, 16>& adj, vset s) {
    if (popcount(s) <= 1) return true;
    return linear_forest_components(adj, s) == 1;
}

class Generator {
public:
    Generator(const SearchConstraints& c, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
              std::atomic<bool>& abort)
        : c_(c), nodes_(nodes), budget_(budget), abort_(abort) {
        m_cap_ = c.m_max.value_or(c.n * (c.n - 1) / 2);
        d_cap_ = c.delta_max.value_or(c.n - 1);
    }

    /// Runs the subtree below `start`; children at depth `stop_depth` go to
    /// `frontier` instead of being expanded when it is non-null.
    void run(PartialGraph start, int stop_depth, std::vector<PartialGraph>* frontier,
             std::vector<FoundGraph>* found) {
        frontier_ = frontier;
        found_ = found;
        stop_depth_ = stop_depth;
        g_ = start;
        if (g_.k == c_.n) {
            emit();
            return;
        }
        if (frontier_ && g_.k == stop_depth_) {
            frontier_->push_back(g_);
            return;
        }
        extend();
    }

    static PartialGraph root() {
        PartialGraph p;
        p.k = 1;
        p.first[0] = -1;
        return p;
    }

private:
    bool finished_ok(vertex_t v) const {
        if (c_.n >= 3 && popcount(g_.adj[v]) < 2) return false;
        return single_induced_path(g_.adj, g_.adj[v]);
    }

    void extend() {
        if (abort_.load(std::memory_order_relaxed)) return;
        const int k = g_.k;
        const int prev_first = k == 1 ? 0 : g_.first[k - 1];
        for (int f = prev_first; f < k; ++f) {
            // vertices below f become finished once the new vertex has first neighbor f
            if (f > prev_first && k > 1 && !finished_ok(f - 1)) break;
            if (popcount(g_.adj[f]) + 1 > d_cap_) continue;
            const vset prev_col = k == 1 ? 0 : g_.adj[k - 1] & prefix_mask(k - 1);
            // lexicographic state of new column vs column k-1 on rows 0..k-2
            int cmp = 0;  // 0 equal so far, -1 already smaller
            if (k > 1) {
                if (g_.first[k - 1] < f) cmp = -1;
            }
            if (!admissible(bit(f), f)) continue;
            choose(f, bit(f), f + 1, cmp, prev_col);
            if (abort_.load(std::memory_order_relaxed)) return;
        }
    }

    // Picks the rest of S over rows [row, k), keeping every monotone condition.
    void choose(int f, vset s, int row, int cmp, vset prev_col) {
        const int k = g_.k;
        if (row == k) {
            consider(f, s);
            return;
        }
        const bool prev_has = k > 1 && row < k - 1 && (prev_col & bit(row));
        const bool compared = row < k - 1;
        // include row
        if (!(compared && cmp == 0 && !prev_has)) {
            const vset t = s | bit(row);
            if (popcount(t) <= d_cap_ && popcount(g_.adj[row]) + 1 <= d_cap_ && admissible(t, row))
                choose(f, t, row + 1, cmp, prev_col);
        }
        // exclude row
        int next_cmp = cmp;
        if (compared && cmp == 0 && prev_has) next_cmp = -1;
        choose(f, s, row + 1, next_cmp, prev_col);
    }

    // Adding `added` (already in t) keeps the new vertex's neighborhood and the
    // neighborhoods of all of t linear forests.
    bool admissible(vset t, vertex_t added) const {
        // new vertex neighborhood: linear forest on t
        const int dn = popcount(g_.adj[added] & t);
        if (dn > 2) return false;
        bool bad = false;
        for_each_vertex(t & ~bit(added), [&](vertex_t u) {
            if (popcount(g_.adj[u] & t) > 2) bad = true;
        });
        if (bad) return false;
        // the new vertex inside N(u) is adjacent to N(u) & t
        for_each_vertex(t, [&](vertex_t u) {
            if (bad) return;
            const vset nu = g_.adj[u];
            const vset touch = nu & t;
            const int c = popcount(touch);
            if (c > 2) {
                bad = true;
                return;
            }
            bool end_ok = true;
            for_each_vertex(touch, [&](vertex_t w) {
                if (popcount(g_.adj[w] & nu) > 1) end_ok = false;
            });
            if (!end_ok) {
                bad = true;
                return;
            }
            if (c == 2 && same_component(nu, lowest(touch), highest(touch))) bad = true;
        });
        if (bad) return false;
        return linear_forest_components(g_.adj, t) >= 0;
    }

    bool same_component(vset region, vertex_t a, vertex_t b) const {
        vset comp = bit(a), frontier = comp;
        while (frontier) {
            vset next = 0;
            for_each_vertex(frontier, [&](vertex_t w) { next |= g_.adj[w] & region; });
            frontier = next & ~comp;
            comp |= next;
        }
        return comp & bit(b);
    }

    void consider(int f, vset s) {
        const int k = g_.k;
        const int remaining = c_.n - (k + 1);
        const int m_new = g_.m + popcount(s);
        if (m_new + remaining + (remaining > 0 ? 1 : 0) > m_cap_) return;

        PartialGraph saved = g_;
        g_.adj[k] = s;
        for_each_vertex(s, [&](vertex_t u) { g_.adj[u] |= bit(k); });
        g_.first[k] = f;
        g_.k = k + 1;
        g_.m = m_new;

        bool ok = true;
        if (remaining == 0) {
            for (vertex_t v = 0; v <= k && ok; ++v) ok = finished_ok(v);
        } else {
            for (vertex_t v = f; v <= k && ok; ++v) {
                const vset nv = g_.adj[v];
                if (!nv) continue;
                const int comps = linear_forest_components(g_.adj, nv);
                if (comps < 0 || comps - 1 > remaining) ok = false;
            }
        }
        if (ok) ok = is_lexmax_canonical(g_.to_graph());
        if (ok) {
            if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) abort_.store(true);
            if (g_.k == c_.n) {
                emit();
            } else if (frontier_ && g_.k == stop_depth_) {
                frontier_->push_back(g_);
            } else {
                extend();
            }
        }
        g_ = saved;
    }

    void emit() {
        if (c_.n >= 3 || c_.n == g_.k) {
            for (vertex_t v = 0; v < g_.k; ++v)
                if (!finished_ok(v)) return;
        }
        FoundGraph fg;
        fg.graph = g_.to_graph();
        found_->push_back(std::move(fg));
    }

    const SearchConstraints& c_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::atomic<bool>& abort_;
    int m_cap_ = 0;
    int d_cap_ = 0;
    PartialGraph g_;
    int stop_depth_ = 0;
    std::vector<PartialGraph>* frontier_ = nullptr;
    std::vector<FoundGraph>* found_ = nullptr;
};

inline void classify(FoundGraph& fg, const SearchConstraints& c) {
    fg.hamiltonian = is_hamiltonian(fg.graph);
    fg.traceable = true;
    if (!fg.hamiltonian) {
        fg.path = find_hamilton_path(fg.graph);
        fg.traceable = fg.path.has_value();
    }
    (void)c;
}

inline bool meets_requirements(const FoundGraph& fg, const SearchConstraints& c) {
    if (c.needs(Requirement::nonhamiltonian) && fg.hamiltonian) return false;
    if (c.needs(Requirement::nontraceable) && fg.traceable) return false;
    return true;
}

}  // namespace detail

inline void validate(const SearchConstraints& c) {
    if (c.n < 1 || c.n > detail::max_search_order)
        throw precondition_error("search order must lie in 1..16");
    if (c.m_max && *c.m_max < 0) throw precondition_error("m_max must be non-negative");
    if (c.delta_max && *c.delta_max < 0) throw precondition_error("delta_max must be non-negative");
}

/// Delivers one canonical representative per isomorphism class of connected
/// locally linear graphs meeting `c` to `sink`, in an order that does not
/// depend on the worker count.
inline SearchReport enumerate_locally_linear(const SearchConstraints& c, const GraphSink& sink = {},
                                             const SearchOptions& opts = {}) {
    validate(c);
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.constraints = c;
    report.workers = std::max(1, opts.workers);

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};

    int split = opts.split_depth >= 0 ? opts.split_depth : std::min(c.n, std::max(1, c.n - 5));
    split = std::clamp(split, 1, c.n);
    report.split_depth = split;

    std::vector<detail::PartialGraph> tasks;
    std::vector<std::vector<detail::FoundGraph>> results(1);
    {
        detail::Generator gen(c, nodes, opts.budget_nodes, abort);
        gen.run(detail::Generator::root(), split, &tasks, &results[0]);
    }
    results.resize(tasks.size() + 1);

    const auto n_tasks = tasks.size();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n_tasks || abort.load()) return;
            detail::Generator gen(c, nodes, opts.budget_nodes, abort);
            gen.run(tasks[i], -1, nullptr, &results[i + 1]);
            for (auto& fg : results[i + 1]) detail::classify(fg, c);
        }
    };
    for (auto& fg : results[0]) detail::classify(fg, c);
    if (report.workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < report.workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (auto& bucket : results) {
        for (auto& fg : bucket) {
            const int m = fg.graph.size();
            ++report.classes;
            ++report.by_size[m];
            if (!fg.hamiltonian) {
                ++report.nonhamiltonian;
                ++report.nonhamiltonian_by_size[m];
            }
            if (!fg.traceable) ++report.nontraceable;
            if (!detail::meets_requirements(fg, c)) continue;
            ++report.delivered;
            if (c.needs(Requirement::nonhamiltonian) || c.needs(Requirement::nontraceable)) {
                Witness w;
                w.graph = fg.graph;
                w.graph6 = emit_graph6(fg.graph);
                w.m = m;
                w.delta = fg.graph.max_degree();
                w.hamiltonian = fg.hamiltonian;
                w.traceable = fg.traceable;
                w.certificate = fg.path;
                w.oracle_nonhamiltonian = fg.graph.order() <= 24 && !hamiltonicity_oracle(fg.graph);
                report.witnesses.push_back(std::move(w));
            }
            if (sink) sink(fg.graph);
        }
    }
    report.nodes = nodes.load();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.complete = !abort.load();
    if (!report.complete) throw budget_error(std::move(report));
    return report;
}

/// Exhaustive ground truth: every labeled graph on n <= 8 vertices, filtered to
/// connected locally linear ones and deduplicated by canonical form.
inline std::map<std::string, Graph> brute_force_enumerate(int n) {
    if (n > 8) throw size_limit_error("brute force enumeration supports n <= 8");
    if (n < 1) throw precondition_error("brute force enumeration needs n >= 1");
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::map<std::string, Graph> out;
    std::array<vset, 16> adj{};
    // Gray-code order: consecutive labeled graphs differ in one edge slot
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step > 0) {
            const auto [i, j] = slots[std::countr_zero(step)];
            adj[i] ^= bit(j);
            adj[j] ^= bit(i);
        }
        // cheap necessary condition first: every neighborhood has inner degrees
        // in 1..2 and exactly |N|-1 edges
        bool plausible = true;
        for (vertex_t v = 0; v < n && plausible; ++v) {
            const vset s = adj[v];
            const int k = popcount(s);
            if (k <= 1) continue;
            int twice = 0;
            for (vset r = s; r && plausible; r &= r - 1) {
                const int d = popcount(adj[lowest(r)] & s);
                plausible = d == 1 || d == 2;
                twice += d;
            }
            plausible = plausible && twice == 2 * (k - 1);
        }
        if (!plausible) continue;
        const Graph g = Graph::from_adjacency(n, {adj.data(), static_cast<std::size_t>(n)});
        if (!g.connected() || !is_locally_linear(g)) continue;
        auto cf = canonical_form(g);
        out.try_emplace(cf.bytes, g.permuted(cf.relabel));
    }
    return out;
}

}  // namespace loclin
