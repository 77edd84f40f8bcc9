#include <catch_amalgamated.hpp>

#include "loclin/hamilton.hpp"
#include "support.hpp"

using namespace loclin;
namespace ts = testing_support;

namespace {

void check_against_brute(const Graph& g) {
    const auto cycle = find_hamilton_cycle(g);
    const auto path = find_hamilton_path(g);
    const bool ham = ts::brute_hamiltonian(g);
    REQUIRE(cycle.has_value() == ham);
    REQUIRE(path.has_value() == ts::brute_traceable(g));
    REQUIRE(hamiltonicity_oracle(g) == ham);
    if (cycle) REQUIRE(verify_certificate(g, *cycle));
    if (path) REQUIRE(verify_certificate(g, *path));
}

}  // namespace

TEST_CASE("hamiltonicity of named graphs", "[hamilton]") {
    CHECK(is_hamiltonian(named::complete(3)));
    CHECK(!is_hamiltonian(named::complete(2)));
    CHECK(!is_hamiltonian(named::empty(1)));
    CHECK(is_traceable(named::empty(1)));
    CHECK(is_traceable(named::complete(2)));
    CHECK(!is_traceable(Graph{}));
    CHECK(!is_hamiltonian(named::path(6)));
    CHECK(is_traceable(named::path(6)));
    CHECK(!is_hamiltonian(named::petersen()));
    CHECK(is_traceable(named::petersen()));
    CHECK(!hamiltonicity_oracle(named::petersen()));
    CHECK(!is_traceable(named::complete_bipartite(1, 3)));
    CHECK(!is_hamiltonian(named::complete_bipartite(3, 4)));
    CHECK(is_traceable(named::complete_bipartite(3, 4)));
    CHECK(is_hamiltonian(named::octahedron()));
    CHECK(!is_traceable(named::empty(2)));
}

TEST_CASE("certificate verification", "[hamilton]") {
    const Graph c5 = named::cycle(5);
    const Certificate good{Certificate::Kind::cycle, {0, 1, 2, 3, 4}};
    CHECK(verify_certificate(c5, good));
    CHECK(!verify_certificate(c5, {Certificate::Kind::cycle, {0, 2, 1, 3, 4}}));
    CHECK(!verify_certificate(c5, {Certificate::Kind::cycle, {0, 1, 2, 3}}));
    CHECK(!verify_certificate(c5, {Certificate::Kind::cycle, {0, 1, 2, 3, 3}}));
    CHECK(!verify_certificate(c5, {Certificate::Kind::cycle, {0, 1, 2, 3, 5}}));
    CHECK(verify_certificate(named::path(5), {Certificate::Kind::path, {0, 1, 2, 3, 4}}));
    CHECK(!verify_certificate(named::path(5), {Certificate::Kind::cycle, {0, 1, 2, 3, 4}}));
    CHECK(!verify_certificate(named::complete(2), {Certificate::Kind::cycle, {0, 1}}));
}

TEST_CASE("solver and subset DP agree with brute force on every graph up to 6 vertices", "[hamilton]") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ts::slots(n)); ++mask)
            check_against_brute(ts::graph_from_mask(n, mask));
}

TEST_CASE("solver and subset DP agree with brute force on random 7 and 8 vertex graphs", "[hamilton]") {
    auto& r = ts::rng();
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 7 + trial % 2;
        check_against_brute(ts::random_graph(n, std::uniform_real_distribution<double>(0.2, 0.7)(r)));
    }
}

TEST_CASE("solver agrees with subset DP on random graphs up to 16 vertices", "[hamilton]") {
    auto& r = ts::rng();
    int ham = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 3 + static_cast<int>(r() % 14);
        // densities around the threshold give both outcomes often
        const Graph g = ts::random_graph(n, std::uniform_real_distribution<double>(0.15, 0.6)(r));
        const auto c = find_hamilton_cycle(g);
        REQUIRE(c.has_value() == hamiltonicity_oracle(g));
        if (c) REQUIRE(verify_certificate(g, *c));
        ham += c.has_value();
    }
    CHECK(ham > 200);
    CHECK(ham < 1800);
}

TEST_CASE("paths from a fixed start agree with the apex construction", "[hamilton]") {
    // G has a Hamilton path from s iff adding a vertex a joined to s and a
    // vertex b joined to a and all of G gives a hamiltonian graph.
    auto& r = ts::rng();
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 2 + static_cast<int>(r() % 9);
        const Graph g = ts::random_graph(n, 0.4);
        const vertex_t s = static_cast<vertex_t>(r() % n);
        const Graph a = g.with_vertex(bit(s));                       // apex a = n, adjacent to s
        const Graph b = a.with_vertex(g.vertices() | bit(n));        // apex b = n + 1, adjacent to V(G) and a
        const auto p = find_hamilton_path_from(g, s);
        REQUIRE(p.has_value() == hamiltonicity_oracle(b));
        if (p) {
            REQUIRE(p->seq.front() == s);
            REQUIRE(verify_certificate(g, *p));
        }
    }
    CHECK_THROWS_AS(find_hamilton_path_from(named::path(3), 3), out_of_range_error);
}

TEST_CASE("oracle size limits", "[hamilton]") {
    CHECK_THROWS_AS(hamiltonicity_oracle(named::cycle(25)), size_limit_error);
    CHECK(hamiltonicity_oracle(named::cycle(24)));
    CHECK_THROWS_AS(is_fully_cycle_extendable(named::complete(17)), size_limit_error);
}

TEST_CASE("full cycle extendability", "[hamilton]") {
    CHECK(is_fully_cycle_extendable(named::complete(3)));
    CHECK(is_fully_cycle_extendable(named::complete(5)));
    CHECK(is_fully_cycle_extendable(named::diamond()));
    CHECK(!is_fully_cycle_extendable(named::cycle(4)));    // no triangles
    CHECK(is_fully_cycle_extendable(named::octahedron()));
    // two triangles sharing a vertex: nonhamiltonian, so the triangle chain stalls
    const Graph bowtie = graph_from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(!is_fully_cycle_extendable(bowtie));

    // every vertex on a triangle and fully cycle extendable forces a Hamilton cycle
    for (int n = 3; n <= 9; ++n)
        for (const Graph& g : ts::corpus(n))
            if (is_fully_cycle_extendable(g)) REQUIRE(is_hamiltonian(g));
}
