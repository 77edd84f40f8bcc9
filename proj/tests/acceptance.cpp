// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "loclin/construct.hpp"
#include "loclin/graph6.hpp"
#include "loclin/search.hpp"
#include "loclin/verify.hpp"

using namespace loclin;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

template <class F>
void criterion(int id, const char* title, F&& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " |" << out.detail.str()
              << " (" << secs << " s)" << std::endl;
}

std::vector<Graph> corpus(int n) {
    std::vector<Graph> out;
    SearchConstraints c;
    c.n = n;
    enumerate_locally_linear(c, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::set<std::string> witness_forms(const SearchReport& r) {
    std::set<std::string> out;
    for (const auto& w : r.witnesses) out.insert(canonical_form(w.graph).bytes);
    return out;
}

// state shared between criteria so later ones can reuse earlier results
std::vector<Witness> stored_witnesses;
std::vector<Graph> stored_chain;

}  // namespace

int main() {
    std::cout.setf(std::ios::fixed);
    std::cout.precision(2);
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    criterion(1, "no connected nonhamiltonian locally linear class for n = 3..11, one at n = 12", [](Outcome& o) {
        const Verdict v = verify_theorem1();
        o.require(v.pass, "verify_theorem1 verdict");
        o.require(v.reports.size() == 10, "reports for n = 3..12");
        for (const auto& r : v.reports) {
            const int n = r.constraints.n;
            o.detail << " n=" << n << (r.constraints.delta_max ? "(D<=6)" : "") << ":" << r.delivered << "/"
                     << r.classes;
            if (n <= 10) o.require(!r.constraints.delta_max, "n <= 10 unrestricted");
            if (n == 11) o.require(r.constraints.delta_max == 6, "n = 11 uses the max-degree 6 cap");
            if (n == 11) o.detail << "[" << r.seconds << "s]";
            o.require(n == 12 ? r.delivered >= 1 : r.delivered == 0, "witness count at n=" + std::to_string(n));
        }
        for (const auto& w : v.witnesses) {
            o.require(!is_hamiltonian(w.graph), "solver says nonhamiltonian");
            o.require(!hamiltonicity_oracle(w.graph), "subset DP says nonhamiltonian");
        }
        stored_witnesses = v.witnesses;
    });

    criterion(2, "order 12: no nonhamiltonian class with m <= 23, at least one with m = 24", [](Outcome& o) {
        SearchConstraints c;
        c.n = 12;
        c.m_max = 24;
        c.add(Requirement::nonhamiltonian);
        const auto r = enumerate_locally_linear(c);
        std::uint64_t below = 0, at = 0;
        for (const auto& w : r.witnesses) {
            below += w.m <= 23;
            at += w.m == 24;
        }
        o.detail << " m<=23:" << below << " m=24:" << at;
        o.require(below == 0, "nothing below 24 edges");
        o.require(at >= 1, "a witness with 24 edges");
        for (const auto& w : r.witnesses) o.require(!hamiltonicity_oracle(w.graph), "DP confirms");
    });

    criterion(3, "triangle chain from an order-12 seed validates for orders 13..50 with m = 2i", [](Outcome& o) {
        std::optional<Witness> seed;
        std::optional<Edge> start;
        for (const auto& w : stored_witnesses) {
            if (w.m != 24) continue;
            if ((start = find_chain_start(w.graph))) {
                seed = w;
                break;
            }
        }
        o.require(seed.has_value(), "a seed with a chain start");
        if (!seed) return;
        o.detail << " seed " << seed->graph6 << " edge (" << start->u << "," << start->v << ")";
        const auto chain = attach_triangle_chain({seed->graph, *start, 50 - 12});
        o.require(chain.size() == 38, "38 links");
        int direct = 0;
        for (const auto& link : chain) {
            const Graph& g = link.graph;
            const int i = g.order();
            o.require(g.connected(), "connected at " + std::to_string(i));
            o.require(static_cast<bool>(is_locally_linear(g)), "locally linear at " + std::to_string(i));
            o.require(g.size() == 2 * i, "m = 2i at " + std::to_string(i));
            o.require(!is_hamiltonian(g), "solver nonhamiltonian at " + std::to_string(i));
            if (i <= 20) {
                o.require(!hamiltonicity_oracle(g), "DP nonhamiltonian at " + std::to_string(i));
                ++direct;
            }
            stored_chain.push_back(g);
        }
        o.detail << " orders " << chain.front().graph.order() << ".." << chain.back().graph.order() << ", DP on "
                 << direct;
    });

    criterion(4, "order 12, m <= 26: every class traceable; 3 | (m - 2n) on the corpus", [](Outcome& o) {
        const Verdict v = verify_theorem3(12);
        o.require(v.pass, "verify_theorem3 verdict");
        o.detail << " classes(m<=26)=" << v.reports.front().classes
                 << " nontraceable=" << v.reports.front().nontraceable;
        std::uint64_t total = 0, divisible = 0;
        for (int n = 3; n <= 12; ++n) {
            SearchConstraints c;
            c.n = n;
            for (auto [m, k] : enumerate_locally_linear(c).by_size) {
                total += k;
                divisible += (m - 2 * n) % 3 == 0 ? k : 0;
            }
        }
        o.detail << " divisibility " << divisible << "/" << total << " (n=3..12)";
        o.require(total > 0 && divisible == total, "divisibility on every class");
    });

    criterion(5, "nonhamiltonian witnesses have max degree <= n - 5, attained at n = 12", [](Outcome& o) {
        const Verdict v = verify_lemma2(12);
        o.require(v.pass, "verify_lemma2 verdict");
        int worst = 0;
        for (const auto& w : stored_witnesses) worst = std::max(worst, w.delta);
        o.require(!stored_witnesses.empty() && worst <= 12 - 5, "stored witnesses respect the bound");
        std::uint64_t attained = 0;
        for (const auto& w : v.witnesses) attained += w.delta == 7;
        o.detail << " max degree over witnesses " << worst << ", delta-capped run attains 7 in " << attained;
        o.require(attained >= 1, "sharpness");
    });

    criterion(6, "invariant suite on every connected locally linear graph up to 10 vertices", [](Outcome& o) {
        std::uint64_t graphs = 0, edges = 0;
        for (int n = 3; n <= 10; ++n) {
            for (const Graph& g : corpus(n)) {
                ++graphs;
                const auto r = check_local_linear_invariants(g);
                o.require(r.precondition_met && r.all_pass(), "invariants on " + emit_graph6(g));
                std::set<Edge> suitable, ones;
                for (const auto& s : suitable_edges(g)) suitable.insert(s.edge);
                for (const auto& [e, t] : edge_triangle_classes(g)) {
                    ++edges;
                    if (t == 1) ones.insert(e);
                }
                o.require(suitable == ones, "suitable edges = 1-edges on " + emit_graph6(g));
            }
        }
        o.detail << " graphs=" << graphs << " edges=" << edges;
        o.require(graphs == 1 + 1 + 1 + 3 + 5 + 19 + 62 + 333, "corpus size");
    });

    criterion(7, "enumeration equals brute force for n = 3..8; solver agrees with subset DP", [](Outcome& o) {
        for (int n = 3; n <= 8; ++n) {
            std::set<std::string> brute, generated;
            for (const auto& [bytes, g] : brute_force_enumerate(n)) brute.insert(bytes);
            for (const Graph& g : corpus(n)) generated.insert(canonical_form(g).bytes);
            o.detail << " " << n << ":" << brute.size() << "/" << generated.size();
            o.require(brute == generated, "class sets at n=" + std::to_string(n));
        }
        std::uint64_t checked = 0, disagreements = 0;
        for (int n = 1; n <= 9; ++n)
            for (const Graph& g : corpus(n)) {
                ++checked;
                disagreements += is_hamiltonian(g) != hamiltonicity_oracle(g);
            }
        std::mt19937_64 rng(20240607);
        std::uniform_int_distribution<int> order(1, 16);
        std::uniform_real_distribution<double> density(0.1, 0.7);
        for (int trial = 0; trial < 10000; ++trial) {
            const int n = order(rng);
            std::bernoulli_distribution coin(density(rng));
            std::vector<std::pair<int, int>> e;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (coin(rng)) e.emplace_back(i, j);
            const Graph g = graph_from_edges(n, e);
            ++checked;
            const auto c = find_hamilton_cycle(g);
            disagreements += c.has_value() != hamiltonicity_oracle(g);
            if (c && !verify_certificate(g, *c)) ++disagreements;
        }
        o.detail << " hamiltonicity checks=" << checked << " disagreements=" << disagreements;
        o.require(disagreements == 0, "zero disagreements");
    });

    criterion(8, "identical reports across worker counts 1, 2 and max", [hw](Outcome& o) {
        SearchConstraints c;
        c.n = 12;
        c.add(Requirement::nonhamiltonian);
        std::optional<SearchReport> base;
        for (int workers : {1, 2, hw}) {
            SearchOptions opts;
            opts.workers = workers;
            const auto r = enumerate_locally_linear(c, {}, opts);
            o.detail << " w=" << workers << ":" << r.classes << "/" << r.delivered;
            if (!base) {
                base = r;
                continue;
            }
            o.require(r.classes == base->classes && r.nonhamiltonian == base->nonhamiltonian &&
                          r.nontraceable == base->nontraceable && r.delivered == base->delivered,
                      "counts at " + std::to_string(workers) + " workers");
            o.require(r.by_size == base->by_size, "size histogram");
            o.require(witness_forms(r) == witness_forms(*base), "witness canonical forms");
            std::vector<std::string> a, b;
            for (const auto& w : r.witnesses) a.push_back(w.graph6);
            for (const auto& w : base->witnesses) b.push_back(w.graph6);
            o.require(a == b, "witness order");
        }
        o.detail << " (max=" << hw << ")";
    });

    criterion(9, "graph6 round trip on 10000 random graphs and all stored witnesses", [](Outcome& o) {
        std::mt19937_64 rng(77);
        std::uniform_int_distribution<int> order(0, 64);
        std::uniform_real_distribution<double> density(0, 1);
        std::uint64_t bad = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const int n = order(rng);
            std::bernoulli_distribution coin(density(rng));
            std::vector<std::pair<int, int>> e;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (coin(rng)) e.emplace_back(i, j);
            const Graph g = graph_from_edges(n, e);
            const std::string s = emit_graph6(g);
            bad += !(parse_graph6(s) == g) || emit_graph6(parse_graph6(s)) != s;
        }
        std::uint64_t stored = 0;
        for (const auto& w : stored_witnesses) {
            ++stored;
            bad += !(parse_graph6(w.graph6) == w.graph) || emit_graph6(parse_graph6(w.graph6)) != w.graph6;
        }
        for (const Graph& g : stored_chain) {
            ++stored;
            bad += !(parse_graph6(emit_graph6(g)) == g);
        }
        o.detail << " random=10000 stored=" << stored << " mismatches=" << bad;
        o.require(stored > 0, "stored witnesses present");
        o.require(bad == 0, "bit-exact round trips");
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return failures == 0 ? 0 : 1;
}
