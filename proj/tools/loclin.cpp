// loclin: checks, exhaustive verification runs and chain construction for
// locally linear graphs.
//
// Exit codes: 0 pass, 1 verdict failed, 2 input error, 3 budget exhausted,
// 4 construction failure, 5 oracle mismatch.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "loclin/canon.hpp"
#include "loclin/construct.hpp"
#include "loclin/graph6.hpp"
#include "loclin/search.hpp"
#include "loclin/serialize.hpp"
#include "loclin/verify.hpp"

namespace fs = std::filesystem;
using namespace loclin;

namespace {

enum exit_code : int { ok = 0, verdict_failed = 1, input_error = 2, budget = 3, construction = 4, mismatch = 5 };

struct RunConfig {
    std::string command;
    std::string target;
    std::string input;
    std::string out;
    int workers = 1;
    std::uint64_t budget_nodes = SearchOptions{}.budget_nodes;
    std::optional<int> n;
    std::optional<int> m_max;
    std::optional<int> delta_max;
    std::vector<std::string> require;
    std::string format = "text";
    int steps = 0;
    int chain_limit = 50;
    bool full_n11 = false;

    json to_json() const {
        return {{"command", command},
                {"target", target},
                {"input", input},
                {"out", out},
                {"workers", workers},
                {"budget_nodes", budget_nodes},
                {"n", n ? json(*n) : json(nullptr)},
                {"m_max", m_max ? json(*m_max) : json(nullptr)},
                {"delta_max", delta_max ? json(*delta_max) : json(nullptr)},
                {"require", require},
                {"format", format},
                {"steps", steps},
                {"chain_limit", chain_limit},
                {"full_n11", full_n11}};
    }

    SearchOptions search() const {
        SearchOptions o;
        o.workers = workers;
        o.budget_nodes = budget_nodes;
        return o;
    }
};

json provenance(const RunConfig& cfg) {
    const json c = cfg.to_json();
    return {{"config", c}, {"config_hash", hex64(fnv1a(c.dump()))}};
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    os << text;
}

std::string read_first_graph6(const std::string& seed) {
    if (fs::exists(seed)) {
        std::ifstream is(seed);
        std::string line;
        while (std::getline(is, line))
            if (!line.empty()) return line;
        throw parse_error("seed file has no graph6 line", 0);
    }
    return seed;
}

void write_witnesses(const fs::path& dir, const std::vector<Witness>& ws) {
    std::string g6;
    json manifest = json::array();
    for (const auto& w : ws) {
        g6 += w.graph6 + '\n';
        manifest.push_back(to_json(w));
    }
    write_file(dir / "witnesses.g6", g6);
    write_file(dir / "manifest.json", manifest.dump(2) + '\n');
}

int cmd_check(const RunConfig& cfg) {
    std::ifstream is(cfg.input);
    if (!is) {
        std::cerr << "error: cannot read " << cfg.input << '\n';
        return input_error;
    }
    json out = json::array();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const parse_error& e) {
            std::cerr << cfg.input << ":" << lineno << ": " << e.what() << '\n';
            return input_error;
        }
        const auto ll = is_locally_linear(g);
        json row = {{"line", lineno},
                    {"graph6", emit_graph6(g)},
                    {"n", g.order()},
                    {"m", g.size()},
                    {"locally_linear", ll.ok},
                    {"locally_traceable", is_locally_traceable(g)},
                    {"locally_hamiltonian", is_locally_hamiltonian(g)}};
        const auto cycle = find_hamilton_cycle(g);
        const auto path = cycle ? std::optional<Certificate>(Certificate{Certificate::Kind::path, cycle->seq})
                                : find_hamilton_path(g);
        row["hamiltonian"] = cycle.has_value();
        row["traceable"] = path.has_value();
        row["certificate"] = cycle ? to_json(*cycle) : path ? to_json(*path) : json(nullptr);
        row["invariants"] = to_json(check_local_linear_invariants(g));
        out.push_back(std::move(row));
    }
    std::cout << out.dump(2) << '\n';
    return ok;
}

int emit_verdict(const RunConfig& cfg, const Verdict& v) {
    json report = provenance(cfg);
    report["verdict"] = {{"name", v.name}, {"pass", v.pass}, {"findings", v.findings}};
    json reports = json::array();
    for (const auto& r : v.reports) reports.push_back(to_json(r));
    report["reports"] = reports;
    json witnesses = json::array();
    for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
    report["witnesses"] = witnesses;
    report["chain_start"] = v.chain_start ? json{v.chain_start->u, v.chain_start->v} : json(nullptr);
    json chain = json::array();
    for (const auto& l : v.chain) chain.push_back(to_json(l));
    report["chain"] = chain;

    std::string csv = csv_header();
    for (const auto& r : v.reports) csv += csv_row(r);

    std::ostream& human = cfg.format == "text" ? std::cout : std::cerr;
    for (const auto& f : v.findings) human << f << '\n';
    human << v.name << ": " << (v.pass ? "PASS" : "FAIL") << '\n';
    if (cfg.format == "json") std::cout << report.dump(2) << '\n';
    if (cfg.format == "csv") std::cout << csv;

    if (!cfg.out.empty()) {
        fs::create_directories(cfg.out);
        write_file(fs::path(cfg.out) / "report.json", report.dump(2) + '\n');
        write_file(fs::path(cfg.out) / "summary.csv", csv);
        write_witnesses(cfg.out, v.witnesses);
        if (!v.chain.empty()) {
            std::string g6;
            for (const auto& l : v.chain) g6 += emit_graph6(l.graph) + '\n';
            write_file(fs::path(cfg.out) / "chain.g6", g6);
            write_file(fs::path(cfg.out) / "chain.json", chain.dump(2) + '\n');
        }
    }
    return v.pass ? ok : verdict_failed;
}

// Re-checks a stored witness corpus: graph6 lines against their manifest.
int cmd_verify_witnesses(const RunConfig& cfg) {
    const fs::path dir = cfg.input;
    std::ifstream g6s(dir / "witnesses.g6"), mf(dir / "manifest.json");
    if (!g6s || !mf) {
        std::cerr << "error: " << dir << " needs witnesses.g6 and manifest.json\n";
        return input_error;
    }
    json manifest;
    try {
        manifest = json::parse(mf);
    } catch (const json::exception& e) {
        std::cerr << "error: manifest.json: " << e.what() << '\n';
        return input_error;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(g6s, line);)
        if (!line.empty()) lines.push_back(line);
    if (!manifest.is_array() || manifest.size() != lines.size()) {
        std::cerr << "error: manifest entry count does not match witnesses.g6\n";
        return input_error;
    }
    bool all = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Graph g;
        try {
            g = parse_graph6(lines[i]);
        } catch (const parse_error& e) {
            std::cerr << "witnesses.g6:" << i + 1 << ": " << e.what() << '\n';
            return input_error;
        }
        const json& entry = manifest[i];
        bool good = entry.value("graph6", "") == lines[i] && emit_graph6(g) == lines[i];
        good = good && entry.value("n", -1) == g.order() && entry.value("m", -1) == g.size();
        const bool ham = is_hamiltonian(g);
        good = good && entry.value("hamiltonian", !ham) == ham;
        if (g.order() <= 24) good = good && hamiltonicity_oracle(g) == ham;
        if (entry.contains("certificate") && !entry["certificate"].is_null()) {
            try {
                good = good && verify_certificate(g, certificate_from_json(entry["certificate"]));
            } catch (const std::exception&) {
                good = false;
            }
        }
        std::cout << (good ? "ok   " : "FAIL ") << lines[i] << '\n';
        all = all && good;
    }
    return all ? ok : verdict_failed;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions opts;
    opts.search = cfg.search();
    opts.unrestricted_n11 = cfg.full_n11;
    opts.chain_limit = cfg.chain_limit;
    const int n = cfg.n.value_or(12);
    if (cfg.target == "1") return emit_verdict(cfg, verify_theorem1(opts));
    if (cfg.target == "2") return emit_verdict(cfg, verify_theorem2(n, cfg.m_max.value_or(2 * n), opts));
    if (cfg.target == "3") return emit_verdict(cfg, verify_theorem3(n, opts));
    if (cfg.target == "lemma2") return emit_verdict(cfg, verify_lemma2(n, opts));
    if (cfg.target == "witnesses") return cmd_verify_witnesses(cfg);
    std::cerr << "error: unknown verify target '" << cfg.target << "' (1, 2, 3, lemma2, witnesses)\n";
    return input_error;
}

int cmd_construct(const RunConfig& cfg) {
    Graph seed;
    try {
        seed = parse_graph6(read_first_graph6(cfg.input));
    } catch (const parse_error& e) {
        std::cerr << "error: seed: " << e.what() << '\n';
        return input_error;
    }
    std::optional<Edge> start;
    try {
        start = find_chain_start(seed);
    } catch (const precondition_error& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return construction;
    }
    if (!start) {
        std::cerr << "construction: no suitable edge of the seed starts a valid chain\n";
        return construction;
    }
    std::vector<ChainLink> chain;
    try {
        chain = attach_triangle_chain({seed, *start, cfg.steps});
    } catch (const construction_error& e) {
        std::cerr << "construction: step " << e.step() << ": " << e.property() << '\n';
        return construction;
    }
    json sidecar = json::array();
    std::string g6;
    for (const auto& l : chain) {
        g6 += emit_graph6(l.graph) + '\n';
        sidecar.push_back(to_json(l));
    }
    std::cout << g6;
    if (!cfg.out.empty()) {
        fs::create_directories(cfg.out);
        write_file(fs::path(cfg.out) / "chain.g6", g6);
        json manifest = provenance(cfg);
        manifest["start_edge"] = {start->u, start->v};
        manifest["chain"] = sidecar;
        write_file(fs::path(cfg.out) / "chain.json", manifest.dump(2) + '\n');
    }
    return ok;
}

int cmd_oracle(const RunConfig& cfg) {
    const int top = cfg.n.value_or(8);
    if (top < 3 || top > 8) {
        std::cerr << "error: oracle order must lie in 3..8\n";
        return input_error;
    }
    std::cout << "n,brute_force,enumerated,equal\n";
    for (int n = 3; n <= top; ++n) {
        const auto brute = brute_force_enumerate(n);
        std::map<std::string, Graph> generated;
        SearchConstraints c;
        c.n = n;
        enumerate_locally_linear(
            c, [&](const Graph& g) { generated.emplace(canonical_form(g).bytes, g); }, cfg.search());
        const bool equal = brute.size() == generated.size() &&
                           std::equal(brute.begin(), brute.end(), generated.begin(),
                                      [](const auto& a, const auto& b) { return a.first == b.first; });
        std::cout << n << ',' << brute.size() << ',' << generated.size() << ',' << (equal ? "yes" : "no") << '\n';
        if (!equal) {
            for (const auto& [bytes, g] : brute)
                if (!generated.count(bytes)) {
                    std::cerr << "mismatch at n=" << n << ": missing from enumeration " << bytes << '\n';
                    return mismatch;
                }
            for (const auto& [bytes, g] : generated)
                if (!brute.count(bytes)) {
                    std::cerr << "mismatch at n=" << n << ": absent from brute force " << bytes << '\n';
                    return mismatch;
                }
        }
    }
    return ok;
}

int cmd_enumerate(const RunConfig& cfg) {
    SearchConstraints c;
    c.n = cfg.n.value_or(0);
    c.m_max = cfg.m_max;
    c.delta_max = cfg.delta_max;
    for (const auto& r : cfg.require) {
        if (r == "connected") c.add(Requirement::connected);
        else if (r == "nonhamiltonian") c.add(Requirement::nonhamiltonian);
        else if (r == "nontraceable") c.add(Requirement::nontraceable);
        else {
            std::cerr << "error: unknown requirement '" << r << "'\n";
            return input_error;
        }
    }
    std::string corpus;
    auto report = enumerate_locally_linear(c, [&](const Graph& g) { corpus += emit_graph6(g) + '\n'; },
                                           cfg.search());
    json out = provenance(cfg);
    out["report"] = to_json(report);
    if (cfg.format == "csv") {
        std::cout << csv_header() << csv_row(report);
    } else if (cfg.format == "json") {
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << corpus;
    }
    if (!cfg.out.empty()) {
        fs::create_directories(cfg.out);
        write_file(fs::path(cfg.out) / "corpus.g6", corpus);
        write_file(fs::path(cfg.out) / "report.json", out.dump(2) + '\n');
        write_file(fs::path(cfg.out) / "summary.csv", csv_header() + csv_row(report));
        write_witnesses(cfg.out, report.witnesses);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally linear graph checks, exhaustive verification and constructions"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("LOCLIN_BUDGET_NODES")) {
        try {
            cfg.budget_nodes = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: LOCLIN_BUDGET_NODES must be an unsigned integer\n";
            return input_error;
        }
    }
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    auto search_flags = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget-nodes", cfg.budget_nodes, "search node ceiling");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* check = app.add_subcommand("check", "property report for every graph6 line of a file");
    check->add_option("input", cfg.input, "graph6 file")->required();

    auto* verify = app.add_subcommand("verify", "run a verification: 1, 2, 3, lemma2, or witnesses");
    verify->add_option("target", cfg.target)->required();
    verify->add_option("--n", cfg.n, "order");
    verify->add_option("--m-max", cfg.m_max, "size cap for the search in verify 2");
    verify->add_option("--chain-limit", cfg.chain_limit, "largest chain order")->check(CLI::Range(12, 64));
    verify->add_flag("--full-n11", cfg.full_n11, "run n = 11 without the max-degree cap");
    verify->add_option("--in", cfg.input, "witness directory (verify witnesses)");
    search_flags(verify);

    auto* construct = app.add_subcommand("construct", "triangle chain from a nonhamiltonian seed");
    construct->add_option("seed", cfg.input, "graph6 string or file")->required();
    construct->add_option("--steps", cfg.steps, "triangles to glue")->check(CLI::NonNegativeNumber);
    construct->add_option("--out", cfg.out, "output directory");

    auto* oracle = app.add_subcommand("oracle", "compare brute force and generated class sets");
    oracle->add_option("--n", cfg.n, "largest order (<= 8)");
    search_flags(oracle);

    auto* enumerate = app.add_subcommand("enumerate", "generate connected locally linear graphs");
    enumerate->add_option("--n", cfg.n, "order")->required();
    enumerate->add_option("--m-max", cfg.m_max, "size cap");
    enumerate->add_option("--delta-max", cfg.delta_max, "max degree cap");
    enumerate->add_option("--require", cfg.require, "connected, nonhamiltonian, nontraceable")->delimiter(',');
    search_flags(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : input_error;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "check") return cmd_check(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "construct") return cmd_construct(cfg);
        if (cfg.command == "oracle") return cmd_oracle(cfg);
        if (cfg.command == "enumerate") return cmd_enumerate(cfg);
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << '\n';
        json partial = provenance(cfg);
        partial["partial"] = to_json(e.partial());
        std::cout << partial.dump(2) << '\n';
        return budget;
    } catch (const construction_error& e) {
        std::cerr << "construction: " << e.what() << '\n';
        return construction;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}
