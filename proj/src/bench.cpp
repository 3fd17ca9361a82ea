#include "eft/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "eft/blocking.hpp"
#include "eft/greedy_exact.hpp"
#include "eft/greedy_poly.hpp"

namespace eft {

std::size_t FaultSpec::resolve(std::size_t n) const {
    if (!scaled()) {
        return value;
    }
    const double x = std::pow(static_cast<double>(n), static_cast<double>(num) / den);
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

std::string FaultSpec::label() const {
    if (!scaled()) {
        return std::to_string(value);
    }
    return "ceil(n^" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

FaultSpec parse_fault_spec(const std::string& text) {
    static const std::regex scaled(R"(\s*ceil\(\s*n\s*\^\s*(\d+)\s*/\s*(\d+)\s*\)\s*)");
    static const std::regex plain(R"(\s*(\d+)\s*)");
    std::smatch match;
    FaultSpec spec;
    if (std::regex_match(text, match, scaled)) {
        spec.num = static_cast<std::uint32_t>(std::stoul(match[1]));
        spec.den = static_cast<std::uint32_t>(std::stoul(match[2]));
        if (spec.den == 0) {
            throw InputError("fault budget '" + text + "' divides by zero");
        }
        return spec;
    }
    if (std::regex_match(text, match, plain)) {
        spec.value = std::stoul(match[1]);
        return spec;
    }
    throw InputError("bad fault budget '" + text + "', expected an integer or ceil(n^a/b)");
}

namespace {

template <class T>
std::vector<T> list_of(const Json& node, const char* key) {
    std::vector<T> out;
    if (node.is_array()) {
        for (const auto& item : node) {
            out.push_back(item.get<T>());
        }
    } else {
        out.push_back(node.get<T>());
    }
    if (out.empty()) {
        throw InputError(std::string("bench key '") + key + "' is an empty list");
    }
    return out;
}

BenchFamily parse_family(const Json& node, std::size_t index) {
    static const std::set<std::string> known = {
        "name", "kind", "p", "degree", "q", "max_weight", "n", "f", "k", "algo",
        "strategy", "trials", "seed", "budget_faultsets", "verify_seed"};
    if (!node.is_object()) {
        throw InputError("bench family " + std::to_string(index) + " is not an object");
    }
    for (const auto& [key, value] : node.items()) {
        if (!known.count(key)) {
            throw InputError("bench family " + std::to_string(index) + ": unknown key '" + key + "'");
        }
    }
    BenchFamily family;
    family.name = node.value("name", "family" + std::to_string(index));
    family.kind = parse_graph_kind(node.value("kind", std::string("gnp")));
    family.params.p = node.value("p", 0.0);
    family.params.degree = node.value("degree", std::size_t{0});
    family.params.q = node.value("q", std::size_t{0});
    family.params.max_weight = node.value("max_weight", std::uint32_t{1});
    family.sizes = node.contains("n") ? list_of<std::size_t>(node["n"], "n")
                                      : std::vector<std::size_t>{0};
    if (!node.contains("f")) {
        throw InputError("bench family '" + family.name + "' has no 'f'");
    }
    const Json& fs = node["f"];
    for (const auto& item : fs.is_array() ? fs : Json::array({fs})) {
        family.faults.push_back(item.is_string() ? parse_fault_spec(item.get<std::string>())
                                                 : FaultSpec{item.get<std::size_t>(), 0, 0});
    }
    family.ks = list_of<std::size_t>(node.value("k", Json(3)), "k");
    family.algos = list_of<std::string>(node.value("algo", Json("poly")), "algo");
    for (const auto& algo : family.algos) {
        if (algo != "exact" && algo != "poly") {
            throw InputError("unknown algo '" + algo + "'");
        }
    }
    family.verify.strategy = parse_strategy(node.value("strategy", std::string("sampled")));
    family.verify.trials = node.value("trials", std::size_t{1000});
    family.seed = node.value("seed", std::uint64_t{1});
    family.verify.seed = node.value("verify_seed", family.seed);
    family.budget_faultsets = node.value("budget_faultsets", family.budget_faultsets);
    family.verify.budget_faultsets = family.budget_faultsets;
    return family;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}

BenchSuite parse_bench_suite(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw InputError(std::string("bench suite is not valid JSON: ") + err.what());
    }
    BenchSuite suite;
    if (!root.is_object()) {
        throw InputError("bench suite must be a JSON object");
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "families") {
            throw InputError("bench suite: unknown key '" + key + "'");
        }
    }
    try {
        std::size_t index = 0;
        for (const auto& node : root.value("families", Json::array())) {
            suite.families.push_back(parse_family(node, index++));
        }
    } catch (const Json::exception& err) {
        throw InputError(std::string("bench suite: ") + err.what());
    }
    return suite;
}

std::vector<EdgeId> classical_greedy_spanner(const Graph& g, double stretch) {
    EdgeOrdering ordering(g);
    std::vector<double> weights(g.edge_count(), kInfinity);
    ShortestPaths search(g);
    std::vector<EdgeId> kept;
    for (EdgeId e : ordering.permutation()) {
        const Edge& edge = g.edge(e);
        const double bound = stretch * edge.weight;
        search.run(edge.a, weights, {}, edge.b, bound * (1 + 1e-8) + 1e-8);
        if (exceeds(search.distance(edge.b), bound)) {
            kept.push_back(e);
            weights[e] = edge.weight;
        }
    }
    return kept;
}

BenchReport run_bench(const BenchSuite& suite, std::ostream* progress) {
    BenchReport report;
    for (const BenchFamily& family : suite.families) {
        for (std::size_t n : family.sizes) {
            GeneratorParams params = family.params;
            params.n = n;
            const std::uint64_t seed = family.seed + n;
            std::optional<Graph> graph;
            std::string graph_error;
            try {
                graph = generate(family.kind, params, seed);
            } catch (const std::exception& err) {
                graph_error = err.what();
            }
            for (const FaultSpec& spec : family.faults) {
                for (std::size_t k : family.ks) {
                    for (const std::string& algo : family.algos) {
                        BenchRow row;
                        row.family = family.name;
                        row.n = n;
                        row.f = spec.resolve(n);
                        row.k = k;
                        row.algo = algo;
                        row.seed = seed;
                        if (!graph) {
                            row.error = graph_error;
                            report.rows.push_back(std::move(row));
                            continue;
                        }
                        row.n = graph->node_count();
                        row.m = graph->edge_count();
                        try {
                            auto start = std::chrono::steady_clock::now();
                            Emulator h;
                            if (algo == "exact") {
                                ExactOptions options;
                                options.budget_faultsets = family.budget_faultsets;
                                h = build_exact(*graph, row.f, k, options);
                            } else {
                                h = build_poly(*graph, row.f, k);
                            }
                            row.build_seconds = seconds_since(start);
                            row.emulator_edges = h.size();
                            row.blocks = extract_blocking(h).size();
                            row.density = row.n == 0 ? 0.0
                                          : static_cast<double>(h.size())
                                                / std::pow(static_cast<double>(row.n),
                                                           1.0 + 1.0 / static_cast<double>(k));
                            if (row.f == 0) {
                                auto baseline = classical_greedy_spanner(*graph, 2.0 * k - 1.0);
                                row.baseline_edges = baseline.size();
                                std::vector<EdgeId> sorted = h.members();
                                std::sort(sorted.begin(), sorted.end());
                                std::sort(baseline.begin(), baseline.end());
                                row.baseline_match = sorted == baseline;
                            }
                            start = std::chrono::steady_clock::now();
                            row.verification = verify_eft(*graph, h, row.f, 2.0 * k - 1.0,
                                                          family.verify);
                            row.verify_seconds = seconds_since(start);
                        } catch (const std::exception& err) {
                            row.error = err.what();
                        }
                        if (progress) {
                            *progress << family.name << " n=" << row.n << " f=" << row.f
                                      << " k=" << row.k << " " << row.algo << " |E(H)|="
                                      << row.emulator_edges;
                            if (row.verification) {
                                *progress << " " << to_string(row.verification->verdict) << " ("
                                          << to_string(row.verification->strategy) << ")";
                            }
                            if (!row.error.empty()) {
                                *progress << " error: " << row.error;
                            }
                            *progress << '\n';
                        }
                        report.rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return report;
}

Json to_json(const BenchReport& report) {
    Json out;
    Json rows = Json::array();
    Json timings = Json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const BenchRow& row = report.rows[i];
        Json r;
        r["family"] = row.family;
        r["n"] = row.n;
        r["m"] = row.m;
        r["f"] = row.f;
        r["k"] = row.k;
        r["algo"] = row.algo;
        r["seed"] = row.seed;
        r["emulator_edges"] = row.emulator_edges;
        r["blocks"] = row.blocks;
        r["density"] = row.density;
        r["verification"] = row.verification ? to_json(*row.verification) : Json(nullptr);
        r["baseline_edges"] = row.baseline_edges ? Json(*row.baseline_edges) : Json(nullptr);
        r["baseline_match"] = row.baseline_match ? Json(*row.baseline_match) : Json(nullptr);
        r["error"] = row.error.empty() ? Json(nullptr) : Json(row.error);
        rows.push_back(std::move(r));
        timings.push_back({{"row", i},
                           {"build_seconds", row.build_seconds},
                           {"verify_seconds", row.verify_seconds}});
    }
    out["rows"] = std::move(rows);
    out["timings"] = std::move(timings);
    return out;
}

std::string to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "family,n,m,f,k,algo,emulator_edges,blocks,density,verdict,strategy,sets_checked,"
           "baseline_edges,build_seconds,verify_seconds,error\n";
    for (const BenchRow& row : report.rows) {
        out << row.family << ',' << row.n << ',' << row.m << ',' << row.f << ',' << row.k << ','
            << row.algo << ',' << row.emulator_edges << ',' << row.blocks << ',' << row.density
            << ',';
        if (row.verification) {
            out << to_string(row.verification->verdict) << ','
                << to_string(row.verification->strategy) << ','
                << row.verification->sets_checked;
        } else {
            out << ",,";
        }
        out << ',';
        if (row.baseline_edges) {
            out << *row.baseline_edges;
        }
        std::string error = row.error;
        std::replace(error.begin(), error.end(), ',', ';');
        std::replace(error.begin(), error.end(), '"', '\'');
        out << ',' << row.build_seconds << ',' << row.verify_seconds << ",\"" << error << "\"\n";
    }
    return out.str();
}

}
