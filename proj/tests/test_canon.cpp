#include <catch_amalgamated.hpp>

#include <set>

#include "loclin/canon.hpp"
#include "support.hpp"

using namespace loclin;
namespace ts = testing_support;

TEST_CASE("relabeled paths share canonical bytes", "[canon]") {
    const Graph a = graph_from_edges(3, {{0, 1}, {1, 2}});
    const Graph b = graph_from_edges(3, {{1, 0}, {0, 2}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(named::complete(3)).bytes != canonical_form(named::path(3)).bytes);
}

TEST_CASE("are_isomorphic examples", "[canon]") {
    const Graph c4 = named::cycle(4);
    const std::vector<vertex_t> perm{2, 0, 3, 1};
    CHECK(are_isomorphic(c4, c4.permuted(perm)));
    CHECK(!are_isomorphic(c4, named::path(4)));
    const Graph k4_minus = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});  // K4 without 13
    CHECK(are_isomorphic(named::diamond(), k4_minus));
    CHECK(!are_isomorphic(named::complete(3), named::complete(4)));
}

TEST_CASE("class counts over all labeled graphs match permutation dedupe", "[canon]") {
    // brute force: least graph6 over all n! labelings
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> lib, brute;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ts::slots(n)); ++mask) {
            const Graph g = ts::graph_from_mask(n, mask);
            const auto cf = canonical_form(g);
            REQUIRE(emit_graph6(g.permuted(cf.relabel)) == cf.bytes);
            lib.insert(cf.bytes);
            brute.insert(ts::brute_min_form(g));
        }
        INFO("n = " << n);
        CHECK(lib.size() == brute.size());
        if (n == 4) CHECK(lib.size() == 11);
    }
}

TEST_CASE("are_isomorphic agrees with permutation search at n <= 7", "[canon]") {
    auto& r = ts::rng();
    int isomorphic = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(r() % 7);
        const double p = std::uniform_real_distribution<double>(0.2, 0.8)(r);
        const Graph a = ts::random_graph(n, p);
        // half the time b is a relabeled copy with one edge flipped or kept
        Graph b = a.permuted(ts::random_permutation(n));
        if (trial % 2 && n >= 2) {
            const int i = static_cast<int>(r() % n);
            int j = static_cast<int>(r() % n);
            if (i == j) j = (j + 1) % n;
            std::array<vset, max_order> adj{};
            for (vertex_t v = 0; v < n; ++v) adj[v] = b.neighbors(v);
            adj[i] ^= bit(j);
            adj[j] ^= bit(i);
            b = Graph::from_adjacency(n, {adj.data(), static_cast<std::size_t>(n)});
        }
        const bool expected = ts::brute_isomorphic(a, b);
        isomorphic += expected;
        REQUIRE(are_isomorphic(a, b) == expected);
    }
    CHECK(isomorphic > 100);
}

TEST_CASE("canonical form is invariant under 100 random relabelings", "[canon]") {
    std::vector<Graph> graphs{named::petersen(), named::complete(8), named::empty(10), named::cycle(12),
                              named::complete_bipartite(4, 4), named::octahedron(), named::cycle(30),
                              named::empty(64), named::complete(64), named::complete_bipartite(32, 32)};
    for (double p : {0.1, 0.5, 0.9}) graphs.push_back(ts::random_graph(64, p));
    for (int n : {9, 13, 16, 24, 40}) graphs.push_back(ts::random_graph(n, 0.4));
    for (const Graph& g : graphs) {
        const auto base = canonical_form(g);
        CHECK(is_canonical(canonical_graph(g)));
        for (int k = 0; k < 100; ++k) REQUIRE(canonical_form(g.permuted(ts::random_permutation(g.order()))) == base);
    }
}

TEST_CASE("lex-max labeling is the greatest bit string and closed under prefixes", "[canon]") {
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ts::slots(n)); mask += 1 + mask % 7) {
            const Graph g = ts::graph_from_mask(n, mask);
            const Graph best = g.permuted(detail::lexmax_relabel(g));
            REQUIRE(detail::is_lexmax_canonical(best));
            // graph6 strings of equal order compare like their bit strings
            std::vector<vertex_t> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::string greatest;
            do {
                greatest = std::max(greatest, emit_graph6(g.permuted(p)));
            } while (std::next_permutation(p.begin(), p.end()));
            REQUIRE(emit_graph6(best) == greatest);
            if (n > 1) {
                const auto prefix = induced_subgraph(best, prefix_mask(n - 1)).graph;
                REQUIRE(detail::is_lexmax_canonical(prefix));
            }
        }
    }
}
