#pragma once

// Drivers that check the extremal statements about nonhamiltonian locally
// linear graphs by exhaustive search and by construction.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "construct.hpp"
#include "local.hpp"
#include "search.hpp"

namespace loclin {

struct VerifyOptions {
    SearchOptions search;
    bool unrestricted_n11 = false;  // run n = 11 without the max-degree cap
    int chain_limit = 50;           // last chain order built by the construction leg
};

struct Verdict {
    std::string name;
    bool pass = true;
    std::vector<std::string> findings;
    std::vector<SearchReport> reports;
    std::vector<Witness> witnesses;
    std::optional<Edge> chain_start;
    std::vector<ChainLink> chain;

    void expect(bool ok, const std::string& line) {
        findings.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
        pass = pass && ok;
    }
};

namespace detail {

inline SearchConstraints nonhamiltonian_search(int n) {
    SearchConstraints c;
    c.n = n;
    c.add(Requirement::nonhamiltonian);
    return c;
}

inline std::string str(std::uint64_t v) { return std::to_string(v); }

// Witness sanity shared by every driver: both deciders agree, invariants hold,
// and the maximum degree respects n - 5.
inline void check_witnesses(Verdict& v, const SearchReport& r) {
    for (const auto& w : r.witnesses) {
        const int n = w.graph.order();
        v.expect(!w.hamiltonian && w.oracle_nonhamiltonian,
                 "witness " + w.graph6 + " nonhamiltonian by backtracking and subset DP");
        v.expect(check_local_linear_invariants(w.graph).all_pass(), "witness " + w.graph6 + " passes invariants");
        v.expect(w.delta <= n - 5, "witness " + w.graph6 + " has max degree " + std::to_string(w.delta) +
                                       " <= " + std::to_string(n - 5));
        if (w.certificate)
            v.expect(verify_certificate(w.graph, *w.certificate), "witness " + w.graph6 + " path certificate valid");
    }
}

}  // namespace detail

/// No nonhamiltonian connected locally linear graph below order 12; one at 12.
inline Verdict verify_theorem1(const VerifyOptions& opts = {}) {
    Verdict v;
    v.name = "theorem1";
    for (int n = 3; n <= 11; ++n) {
        auto c = detail::nonhamiltonian_search(n);
        if (n == 11 && !opts.unrestricted_n11) c.delta_max = 6;
        auto r = enumerate_locally_linear(c, {}, opts.search);
        v.expect(r.delivered == 0, "n=" + std::to_string(n) + (c.delta_max ? " (max degree <= 6)" : "") + ": " +
                                       detail::str(r.classes) + " classes, " + detail::str(r.delivered) +
                                       " nonhamiltonian");
        v.reports.push_back(std::move(r));
    }
    auto r = enumerate_locally_linear(detail::nonhamiltonian_search(12), {}, opts.search);
    v.expect(r.delivered >= 1,
             "n=12: " + detail::str(r.classes) + " classes, " + detail::str(r.delivered) + " nonhamiltonian");
    detail::check_witnesses(v, r);
    v.witnesses = r.witnesses;
    v.reports.push_back(std::move(r));
    return v;
}

/// Minimum size 2n at order n: exhaustive below the cap, then the triangle
/// chain from an order-n seed up to opts.chain_limit.
inline Verdict verify_theorem2(int n = 12, int search_cap = 24, const VerifyOptions& opts = {}) {
    Verdict v;
    v.name = "theorem2";
    if (search_cap < 2 * n) throw precondition_error("search cap must reach 2n");
    auto c = detail::nonhamiltonian_search(n);
    c.m_max = search_cap;
    auto r = enumerate_locally_linear(c, {}, opts.search);
    std::uint64_t below = 0, at = 0;
    for (const auto& w : r.witnesses) {
        below += w.m < 2 * n;
        at += w.m == 2 * n;
    }
    v.expect(below == 0, "n=" + std::to_string(n) + ": " + detail::str(below) + " nonhamiltonian classes with m < " +
                             std::to_string(2 * n));
    v.expect(at >= 1, "n=" + std::to_string(n) + ": " + detail::str(at) + " nonhamiltonian classes with m = " +
                          std::to_string(2 * n));
    detail::check_witnesses(v, r);
    v.witnesses = r.witnesses;
    v.reports.push_back(std::move(r));

    if (opts.chain_limit <= n) return v;
    for (const auto& w : v.witnesses) {
        if (w.m != 2 * n) continue;
        if (auto e = find_chain_start(w.graph)) {
            v.chain_start = e;
            try {
                v.chain = attach_triangle_chain({w.graph, *e, opts.chain_limit - n});
            } catch (const construction_error& err) {
                v.expect(false, std::string("chain from ") + w.graph6 + ": " + err.what());
                return v;
            }
            bool sizes = true;
            for (const auto& link : v.chain)
                sizes = sizes && link.graph.size() == 2 * link.graph.order() && !link.hamiltonian &&
                        link.locally_linear && link.graph.connected();
            v.expect(sizes, "chain from " + w.graph6 + " validates for orders " + std::to_string(n + 1) + ".." +
                                std::to_string(opts.chain_limit) + " with m = 2n");
            return v;
        }
    }
    v.expect(false, "no order-" + std::to_string(n) + " witness admits a validated chain start");
    return v;
}

/// Every locally linear graph of order n with m <= 2n + 2 is traceable, and
/// 3 divides m - 2n throughout.
inline Verdict verify_theorem3(int n = 12, const VerifyOptions& opts = {}) {
    Verdict v;
    v.name = "theorem3";
    SearchConstraints c;
    c.n = n;
    c.m_max = 2 * n + 2;
    c.add(Requirement::nontraceable);
    auto r = enumerate_locally_linear(c, {}, opts.search);
    v.expect(r.delivered == 0, "n=" + std::to_string(n) + ", m <= " + std::to_string(2 * n + 2) + ": " +
                                   detail::str(r.classes) + " classes, " + detail::str(r.delivered) +
                                   " nontraceable");
    bool divisible = true;
    for (auto [m, count] : r.by_size) divisible = divisible && (m - 2 * n) % 3 == 0;
    v.expect(divisible, "3 | (m - 2n) on every enumerated class");
    v.witnesses = r.witnesses;
    v.reports.push_back(std::move(r));
    return v;
}

/// Nonhamiltonian locally linear graphs have max degree <= n - 5, with equality attained.
inline Verdict verify_lemma2(int n = 12, const VerifyOptions& opts = {}) {
    Verdict v;
    v.name = "lemma2";
    auto r = enumerate_locally_linear(detail::nonhamiltonian_search(n), {}, opts.search);
    int worst = 0;
    for (const auto& w : r.witnesses) worst = std::max(worst, w.delta);
    v.expect(r.witnesses.empty() || worst <= n - 5,
             "n=" + std::to_string(n) + ": " + detail::str(r.witnesses.size()) +
                 " nonhamiltonian classes, largest max degree " + std::to_string(worst));
    v.reports.push_back(std::move(r));

    auto c = detail::nonhamiltonian_search(n);
    c.delta_max = n - 5;
    auto sharp = enumerate_locally_linear(c, {}, opts.search);
    std::uint64_t attained = 0;
    for (const auto& w : sharp.witnesses) attained += w.delta == n - 5;
    v.expect(attained >= 1, "n=" + std::to_string(n) + " with max degree <= " + std::to_string(n - 5) + ": " +
                                detail::str(attained) + " witnesses attain it");
    detail::check_witnesses(v, sharp);
    v.witnesses = sharp.witnesses;
    v.reports.push_back(std::move(sharp));
    return v;
}

}  // namespace loclin
