#pragma once

// JSON and CSV forms of reports, certificates and witness manifests.

#include <cstdint>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "construct.hpp"
#include "graph6.hpp"
#include "hamilton.hpp"
#include "local.hpp"
#include "search.hpp"

namespace loclin {

using json = nlohmann::json;

inline json to_json(const Counterexample& ce) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, vertex_t>) {
                return json{{"vertex", x}};
            } else if constexpr (std::is_same_v<T, Edge>) {
                return json{{"edge", {x.u, x.v}}};
            } else {
                return json{{"set", x}};
            }
        },
        ce);
}

/// {check_name: {pass, counterexample}}, plus a "precondition" entry.
inline json to_json(const InvariantReport& r) {
    json out = json::object();
    out["precondition"] = {{"pass", r.precondition_met},
                           {"counterexample", r.precondition_met ? json(nullptr) : json(r.precondition_failure)}};
    for (const auto& c : r.checks) out[c.name] = {{"pass", c.pass}, {"counterexample", to_json(c.counterexample)}};
    return out;
}

inline const char* kind_name(Certificate::Kind k) { return k == Certificate::Kind::cycle ? "cycle" : "path"; }

inline json to_json(const Certificate& c) { return {{"kind", kind_name(c.kind)}, {"seq", c.seq}}; }

inline Certificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("seq"))
        throw malformed_input_error("certificate needs kind and seq");
    Certificate c;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cycle") {
        c.kind = Certificate::Kind::cycle;
    } else if (kind == "path") {
        c.kind = Certificate::Kind::path;
    } else {
        throw malformed_input_error("certificate kind must be cycle or path");
    }
    c.seq = j.at("seq").get<std::vector<vertex_t>>();
    return c;
}

inline json requirement_list(unsigned require) {
    json out = json::array();
    if (require & static_cast<unsigned>(Requirement::connected)) out.push_back("connected");
    if (require & static_cast<unsigned>(Requirement::nonhamiltonian)) out.push_back("nonhamiltonian");
    if (require & static_cast<unsigned>(Requirement::nontraceable)) out.push_back("nontraceable");
    return out;
}

inline json to_json(const SearchConstraints& c) {
    return {{"n", c.n},
            {"m_max", c.m_max ? json(*c.m_max) : json(nullptr)},
            {"delta_max", c.delta_max ? json(*c.delta_max) : json(nullptr)},
            {"require", requirement_list(c.require)}};
}

/// One witness manifest entry.
inline json to_json(const Witness& w) {
    json out = {{"graph6", w.graph6},
                {"n", w.graph.order()},
                {"m", w.m},
                {"delta", w.delta},
                {"hamiltonian", w.hamiltonian},
                {"traceable", w.traceable},
                {"oracle_nonhamiltonian", w.oracle_nonhamiltonian}};
    out["certificate"] = w.certificate ? to_json(*w.certificate) : json(nullptr);
    return out;
}

inline json size_histogram(const std::map<int, std::uint64_t>& h) {
    json out = json::object();
    for (auto [m, k] : h) out[std::to_string(m)] = k;
    return out;
}

inline json to_json(const SearchReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return {{"constraints", to_json(r.constraints)},
            {"classes", r.classes},
            {"nonhamiltonian", r.nonhamiltonian},
            {"nontraceable", r.nontraceable},
            {"delivered", r.delivered},
            {"by_size", size_histogram(r.by_size)},
            {"nonhamiltonian_by_size", size_histogram(r.nonhamiltonian_by_size)},
            {"witnesses", witnesses},
            {"nodes", r.nodes},
            {"seconds", r.seconds},
            {"workers", r.workers},
            {"split_depth", r.split_depth},
            {"complete", r.complete}};
}

/// Chain sidecar entry.
inline json to_json(const ChainLink& l) {
    return {{"step", l.step},
            {"n", l.graph.order()},
            {"m", l.graph.size()},
            {"locally_linear", l.locally_linear},
            {"hamiltonian", l.hamiltonian},
            {"graph6", emit_graph6(l.graph)}};
}

inline std::string csv_header() { return "n,classes,nonhamiltonian,nontraceable,seconds\n"; }

inline std::string csv_row(const SearchReport& r) {
    std::ostringstream os;
    os << r.constraints.n << ',' << r.classes << ',' << r.nonhamiltonian << ',' << r.nontraceable << ','
       << r.seconds << '\n';
    return os.str();
}

/// 64-bit FNV-1a, used to fingerprint run configurations.
inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 15];
    return out;
}

}  // namespace loclin
