#pragma once

// Canonical labeling.
//
// The public form comes from an individualization-refinement search: color
// refinement splits cells by neighbor counts into splitter cells, the first
// non-singleton cell is individualized one vertex at a time, and every discrete
// partition is a labeling. The canonical labeling is the leaf whose graph6
// string is least. Equal leaves yield automorphisms, which prune siblings and
// trigger a jump back to the level where the two leaves diverge.
//
// The enumerator uses a second notion: the labeling whose upper-triangle bit
// string (column by column) is lexicographically greatest over all labelings.
// Position p contributes the column "adjacency of the vertex at p to the
// vertices at 0..p-1", so only vertices attaining the largest column can lead
// to the maximum. Deleting the last vertex of a lex-max graph leaves a lex-max
// graph, and in a connected one the smallest earlier neighbor of vertex j is
// nondecreasing in j. This search is exponential on dense graphs and is only
// run on the small graphs the enumerator builds.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace loclin {

struct CanonicalForm {
    std::string bytes;                // graph6 of the canonically relabeled graph
    std::vector<vertex_t> relabel;    // relabel[v] = canonical id of v

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
};

namespace detail {

class LexMaxSearch {
public:
    enum class Mode { find_max, test_identity };

    LexMaxSearch(const Graph& g, Mode mode) : g_(g), n_(g.order()), mode_(mode) {
        cur_.assign(n_, -1);
        col_.assign(static_cast<std::size_t>(n_) * n_, 0);
        cur_col_.assign(n_, 0);
        best_col_.assign(n_, 0);
        status_eq_.assign(n_ + 1, true);
        if (mode_ == Mode::test_identity) {
            have_best_ = true;
            best_perm_.resize(n_);
            std::iota(best_perm_.begin(), best_perm_.end(), 0);
            for (int p = 0; p < n_; ++p) best_col_[p] = identity_column(p);
        }
    }

    /// Runs the search; in test mode returns false as soon as a greater labeling exists.
    bool run() {
        if (n_ == 0) return true;
        return descend(0, 0);
    }

    const std::vector<vertex_t>& best_perm() const { return best_perm_; }

private:
    vset identity_column(int p) const {
        vset c = 0;
        for (int i = 0; i < p; ++i) c = (c << 1) | (g_.adjacent(i, p) ? 1 : 0);
        return c;
    }

    vset& col(int depth, vertex_t v) { return col_[static_cast<std::size_t>(depth) * n_ + v]; }

    bool fixes_prefix(const std::vector<vertex_t>& gen, int p) const {
        for (int i = 0; i < p; ++i)
            if (gen[cur_[i]] != cur_[i]) return false;
        return true;
    }

    static vertex_t find(std::vector<vertex_t>& uf, vertex_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }

    bool descend(int p, vset placed) {
        if (p == n_) return leaf();

        vset cand = 0;
        vset max_col = 0;
        bool any = false;
        for_each_vertex(g_.vertices() & ~placed, [&](vertex_t v) {
            const vset c = p == 0 ? 0 : col(p, v);
            if (!any || c > max_col) {
                max_col = c;
                cand = bit(v);
                any = true;
            } else if (c == max_col) {
                cand |= bit(v);
            }
        });

        std::vector<vertex_t> tried;
        std::vector<vertex_t> uf;
        std::size_t gens_seen = static_cast<std::size_t>(-1);

        bool ok = true;
        for_each_vertex(cand, [&](vertex_t v) {
            if (!ok) return;
            // status may have flipped to "equal" after a new incumbent was found below
            const bool eq = have_best_ && status_eq_[p];
            bool child_eq = eq;
            if (eq) {
                if (max_col < best_col_[p]) return;
                if (max_col > best_col_[p]) {
                    if (mode_ == Mode::test_identity) {
                        ok = false;
                        return;
                    }
                    child_eq = false;
                }
            }
            if (!tried.empty() && !autos_.empty()) {
                if (gens_seen != autos_.size()) {
                    uf.resize(n_);
                    std::iota(uf.begin(), uf.end(), 0);
                    for (const auto& gen : autos_) {
                        if (!fixes_prefix(gen, p)) continue;
                        for (vertex_t x = 0; x < n_; ++x) {
                            const vertex_t a = find(uf, x), b = find(uf, gen[x]);
                            if (a != b) uf[a] = b;
                        }
                    }
                    gens_seen = autos_.size();
                }
                const vertex_t root = find(uf, v);
                for (vertex_t u : tried)
                    if (find(uf, u) == root) return;
            }
            tried.push_back(v);

            cur_[p] = v;
            cur_col_[p] = max_col;
            status_eq_[p + 1] = child_eq;
            if (p + 1 < n_) {
                for_each_vertex(g_.vertices() & ~placed & ~bit(v), [&](vertex_t w) {
                    const vset prev = p == 0 ? 0 : col(p, w);
                    col(p + 1, w) = (prev << 1) | (g_.adjacent(v, w) ? 1 : 0);
                });
            }
            if (!descend(p + 1, placed | bit(v))) ok = false;
        });
        return ok;
    }

    bool leaf() {
        if (have_best_ && status_eq_[n_]) {
            // equal strings: best_perm_[i] -> cur_[i] is an automorphism
            std::vector<vertex_t> gen(n_);
            bool identity = true;
            for (int i = 0; i < n_; ++i) {
                gen[best_perm_[i]] = cur_[i];
                identity = identity && best_perm_[i] == cur_[i];
            }
            if (!identity && autos_.size() < max_generators) autos_.push_back(std::move(gen));
            return true;
        }
        best_perm_ = cur_;
        best_col_ = cur_col_;
        have_best_ = true;
        std::fill(status_eq_.begin(), status_eq_.end(), true);
        return true;
    }

    static constexpr std::size_t max_generators = 128;

    const Graph& g_;
    int n_;
    Mode mode_;
    std::vector<vertex_t> cur_;          // position -> vertex
    std::vector<vset> col_;              // per depth, per vertex: column if placed next
    std::vector<vset> cur_col_;
    std::vector<vset> best_col_;
    std::vector<vertex_t> best_perm_;
    std::vector<char> status_eq_;        // prefix 0..p-1 equals the incumbent's
    bool have_best_ = false;
    std::vector<std::vector<vertex_t>> autos_;
};


/// True iff the identity labeling of g is its lex-max labeling.
inline bool is_lexmax_canonical(const Graph& g) {
    LexMaxSearch search(g, LexMaxSearch::Mode::test_identity);
    return search.run();
}

/// relabel[v] = position of v in the lex-max labeling.
inline std::vector<vertex_t> lexmax_relabel(const Graph& g) {
    LexMaxSearch search(g, LexMaxSearch::Mode::find_max);
    search.run();
    std::vector<vertex_t> relabel(g.order(), 0);
    const auto& order = search.best_perm();
    for (int p = 0; p < g.order(); ++p) relabel[order[p]] = p;
    return relabel;
}

// Ordered partition of the vertex set.
using Partition = std::vector<vset>;

// Splits cells by neighbor counts into each queued splitter set, replacing a
// cell by its pieces in increasing count order and queueing every piece, until
// the queue is empty. Depends only on the graph, the input partition and the
// splitters, never on vertex ids. Starting from an equitable partition with the
// newly individualized singleton as the only splitter yields an equitable one.
inline void refine(const Graph& g, Partition& cells, std::vector<vset> queue) {
    const int n = g.order();
    std::array<int, max_order> count{};
    std::vector<vertex_t> members;
    for (std::size_t head = 0; head < queue.size() && static_cast<int>(cells.size()) < n; ++head) {
        const vset splitter = queue[head];
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (popcount(cells[c]) == 1) continue;
            members = to_vector(cells[c]);
            bool uniform = true;
            for (vertex_t v : members) {
                count[v] = popcount(g.neighbors(v) & splitter);
                uniform = uniform && count[v] == count[members[0]];
            }
            if (uniform) continue;
            std::stable_sort(members.begin(), members.end(),
                             [&](vertex_t a, vertex_t b) { return count[a] < count[b]; });
            Partition pieces;
            vset piece = bit(members[0]);
            for (std::size_t i = 1; i < members.size(); ++i) {
                if (count[members[i]] != count[members[i - 1]]) {
                    pieces.push_back(piece);
                    piece = 0;
                }
                piece |= bit(members[i]);
            }
            pieces.push_back(piece);
            queue.insert(queue.end(), pieces.begin(), pieces.end());
            cells[c] = pieces[0];
            cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c) + 1, pieces.begin() + 1, pieces.end());
            c += pieces.size() - 1;
        }
    }
}

class RefinementSearch {
public:
    explicit RefinementSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        CanonicalForm out;
        if (n_ == 0) {
            out.bytes = emit_graph6(g_);
            return out;
        }
        Partition root{g_.vertices()};
        refine(g_, root, {g_.vertices()});
        descend(root, 0);
        out.relabel = best_relabel_;
        out.bytes = best_bytes_;
        return out;
    }

private:
    static constexpr std::size_t max_generators = 256;

    static vertex_t find(std::vector<vertex_t>& uf, vertex_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }

    bool fixes_path(const std::vector<vertex_t>& gen, int level) const {
        for (int i = 0; i < level; ++i)
            if (gen[path_[i]] != path_[i]) return false;
        return true;
    }

    // Returns the level to resume at; a value below `level` unwinds this node.
    int descend(const Partition& cells, int level) {
        if (static_cast<int>(cells.size()) == n_) return leaf(cells, level);

        std::size_t target = 0;
        while (popcount(cells[target]) == 1) ++target;

        if (static_cast<int>(path_.size()) <= level) path_.resize(level + 1);
        std::vector<vertex_t> tried;
        std::vector<vertex_t> uf;
        std::size_t gens_seen = static_cast<std::size_t>(-1);

        for (vertex_t v : to_vector(cells[target])) {
            if (!tried.empty() && !autos_.empty()) {
                if (gens_seen != autos_.size()) {
                    uf.resize(n_);
                    std::iota(uf.begin(), uf.end(), 0);
                    for (const auto& gen : autos_) {
                        if (!fixes_path(gen, level)) continue;
                        for (vertex_t x = 0; x < n_; ++x) {
                            const vertex_t a = find(uf, x), b = find(uf, gen[x]);
                            if (a != b) uf[a] = b;
                        }
                    }
                    gens_seen = autos_.size();
                }
                const vertex_t root = find(uf, v);
                if (std::any_of(tried.begin(), tried.end(), [&](vertex_t u) { return find(uf, u) == root; }))
                    continue;
            }
            tried.push_back(v);

            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    child.push_back(bit(v));
                    child.push_back(cells[c] & ~bit(v));
                } else {
                    child.push_back(cells[c]);
                }
            }
            refine(g_, child, {bit(v)});
            path_[level] = v;
            const int resume = descend(child, level + 1);
            if (resume < level) return resume;
        }
        return level;
    }

    int leaf(const Partition& cells, int level) {
        std::vector<vertex_t> relabel(n_);
        for (int c = 0; c < n_; ++c) relabel[lowest(cells[c])] = c;
        std::string bytes = emit_graph6(g_.permuted(relabel));
        if (best_bytes_.empty() || bytes < best_bytes_) {
            best_bytes_ = std::move(bytes);
            best_relabel_ = std::move(relabel);
            best_path_.assign(path_.begin(), path_.begin() + level);
            return level;
        }
        if (bytes != best_bytes_) return level;

        // relabel^-1 after best_relabel_ maps the best leaf onto this one
        std::vector<vertex_t> inverse(n_), gen(n_);
        for (vertex_t v = 0; v < n_; ++v) inverse[relabel[v]] = v;
        for (vertex_t v = 0; v < n_; ++v) gen[v] = inverse[best_relabel_[v]];
        if (autos_.size() < max_generators) autos_.push_back(std::move(gen));
        // the subtree below the divergence point is the image of one already searched
        int diverge = 0;
        while (diverge < level && diverge < static_cast<int>(best_path_.size()) &&
               best_path_[diverge] == path_[diverge])
            ++diverge;
        return diverge;
    }

    const Graph& g_;
    int n_;
    std::vector<vertex_t> path_;         // individualized vertex per level
    std::vector<vertex_t> best_path_;
    std::string best_bytes_;
    std::vector<vertex_t> best_relabel_;
    std::vector<std::vector<vertex_t>> autos_;
};

}  // namespace detail

/// Isomorphism invariant labeling; bytes are the graph6 string of the relabeled graph.
inline CanonicalForm canonical_form(const Graph& g) { return detail::RefinementSearch(g).run(); }

inline Graph canonical_graph(const Graph& g) { return g.permuted(canonical_form(g).relabel); }

/// True iff g already carries its canonical labeling.
inline bool is_canonical(const Graph& g) { return canonical_form(g).bytes == emit_graph6(g); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a).bytes == canonical_form(b).bytes;
}

}  // namespace loclin
