// eftemu: command-line front end for the fault-tolerant emulator toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eft/bench.hpp"
#include "eft/blocking.hpp"
#include "eft/generators.hpp"
#include "eft/graph_io.hpp"
#include "eft/greedy_exact.hpp"
#include "eft/greedy_poly.hpp"
#include "eft/lbdc.hpp"
#include "eft/lower_bound.hpp"
#include "eft/report.hpp"
#include "eft/scum.hpp"

using namespace eft;

namespace {

enum Exit { ok = 0, verification_failed = 1, input_error = 2, budget_exceeded = 3 };

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_json(const std::string& path, const Json& json) {
    write_text_file(path, json.dump(2) + "\n");
}

std::size_t pick(const std::optional<std::size_t>& flag, const std::optional<std::size_t>& file,
                 const char* name) {
    if (flag) {
        return *flag;
    }
    if (file) {
        return *file;
    }
    throw InputError(std::string("--") + name + " is required (the input does not record it)");
}

BlockingSet blocks_of(const Document& doc, const Emulator& h) {
    return doc.blocks ? doc.blocking() : extract_blocking(h);
}

struct Flags {
    std::string input = "-";
    std::string out = "-";
    std::optional<std::size_t> f;
    std::optional<std::size_t> k;
    std::uint64_t seed = 1;
    std::uint64_t budget_faultsets = 50'000'000;
    std::size_t budget_cycles = 64;
    std::size_t threads = 0;

    // gen
    std::string kind;
    std::size_t n = 0;
    double p = 0.1;
    std::size_t degree = 0;
    std::size_t q = 2;
    std::uint32_t max_weight = 1;

    // build
    std::string algo = "exact";
    std::string order = "lex";

    // verify
    std::string strategy = "exhaustive";
    std::size_t trials = 1000;
    std::string scope = "edges";

    // analyze
    bool do_clean = false;
    std::string emit_doc;
    bool emit_paths = false;
    std::uint64_t budget_paths = 50'000'000;

    // lbdc
    NodeId u = 0;
    NodeId v = 0;
    std::size_t t = 3;
    std::size_t ell = 2;
    std::vector<EdgeId> faults;
    std::size_t cap = 8;

    // lower-bound attack
    std::vector<NodeId> edge;

    // bench
    std::string csv;
};

int run_gen(const Flags& fl) {
    GeneratorParams params;
    params.n = fl.n;
    params.p = fl.p;
    params.degree = fl.degree;
    params.q = fl.q;
    params.max_weight = fl.max_weight;
    Graph g = generate(parse_graph_kind(fl.kind), params, fl.seed);
    std::ostringstream out;
    write_graph(out, g);
    write_text_file(fl.out, out.str());
    return ok;
}

int run_build(const Flags& fl) {
    if (!fl.f || !fl.k) {
        throw InputError("build needs --f and --k");
    }
    if (*fl.k < 1) {
        throw InputError("k must be at least 1");
    }
    Document doc = read_document(fl.input);
    Emulator h;
    if (fl.algo == "exact") {
        ExactOptions options;
        options.budget_faultsets = fl.budget_faultsets;
        options.threads = fl.threads;
        if (fl.order == "reverse") {
            options.order = SearchOrder::reverse_lexicographic;
        } else if (fl.order != "lex") {
            throw InputError("unknown --order '" + fl.order + "'");
        }
        h = build_exact(doc.graph, *fl.f, *fl.k, options);
    } else if (fl.algo == "poly") {
        if (*fl.k < 2) {
            throw InputError("build --algo poly needs k >= 2");
        }
        h = build_poly(doc.graph, *fl.f, *fl.k);
    } else {
        throw InputError("unknown --algo '" + fl.algo + "'");
    }
    std::ostringstream out;
    write_graph(out, doc.graph);
    write_emulator(out, h, fl.f, fl.k);
    write_text_file(fl.out, out.str());
    std::cerr << "built " << fl.algo << " emulator: |E(H)|=" << h.size() << " of "
              << doc.graph.edge_count() << " edges\n";
    return ok;
}

int run_verify(const Flags& fl) {
    Document doc = read_document(fl.input);
    Emulator h = doc.emulator();
    const std::size_t f = pick(fl.f, doc.f, "f");
    const std::size_t k = pick(fl.k, doc.k, "k");
    VerifyOptions options;
    options.strategy = parse_strategy(fl.strategy);
    options.trials = fl.trials;
    options.seed = fl.seed;
    options.budget_faultsets = fl.budget_faultsets;
    options.threads = fl.threads;
    if (fl.scope == "all") {
        options.scope = StretchScope::all_pairs;
    } else if (fl.scope != "edges") {
        throw InputError("unknown --scope '" + fl.scope + "'");
    }
    VerificationReport report = verify_eft(doc.graph, h, f, 2.0 * k - 1.0, options);
    Json json = to_json(report);
    json["f"] = f;
    json["k"] = k;
    json["emulator_edges"] = h.size();
    emit_json(fl.out, json);
    std::cerr << to_string(report.verdict) << " (" << to_string(report.strategy) << ", "
              << report.sets_checked << " fault sets), |E(H)|=" << h.size() << '\n';
    switch (report.verdict) {
    case Verdict::pass: return ok;
    case Verdict::fail: return verification_failed;
    case Verdict::budget: return budget_exceeded;
    }
    return ok;
}

int run_analyze_blocking(const Flags& fl) {
    Document doc = read_document(fl.input);
    Emulator h = doc.emulator();
    const std::size_t k = pick(fl.k, doc.k, "k");
    if (2 * k > fl.budget_cycles) {
        throw BudgetExceeded("cycles of length " + std::to_string(2 * k)
                             + " exceed --budget-cycles " + std::to_string(fl.budget_cycles));
    }
    BlockingSet blocks = blocks_of(doc, h);
    Json json;
    json["k"] = k;
    json["emulator_edges"] = h.size();
    json["blocks"] = blocks.size();
    json["max_participation"] = blocks.max_participation();
    json["max_later_participation"] = max_later_participation(h, blocks);
    auto failure = validate_double_blocking(doc.graph, h, blocks, k);
    json["valid"] = !failure;
    json["counterexample"] = failure ? to_json(*failure) : Json(nullptr);
    if (fl.do_clean) {
        const std::size_t f = pick(fl.f, doc.f, "f");
        json["clean"] = to_json(clean(doc.graph, h, blocks, f));
    }
    emit_json(fl.out, json);
    if (!fl.emit_doc.empty()) {
        Document with_blocks = doc;
        with_blocks.blocks = std::vector<Block>(blocks.blocks().begin(), blocks.blocks().end());
        write_text_file(fl.emit_doc, to_text(with_blocks));
    }
    return failure ? verification_failed : ok;
}

int run_analyze_scum(const Flags& fl) {
    Document doc = read_document(fl.input);
    Emulator h = doc.emulator();
    const std::size_t k = pick(fl.k, doc.k, "k");
    BlockingSet blocks = blocks_of(doc, h);
    ScumOptions options;
    options.budget_paths = fl.budget_paths;
    options.collect = fl.emit_paths;
    ScumEnumeration scum = enumerate_scum(doc.graph, h, blocks, k, options);
    Json json;
    json["k"] = k;
    json["scum_paths"] = scum.count;
    if (fl.emit_paths) {
        json["meets"] = count_meets(scum.paths).meets;
        Json paths = Json::array();
        for (const auto& path : scum.paths) {
            paths.push_back(to_json(path));
        }
        json["paths"] = std::move(paths);
    }
    const double n = static_cast<double>(doc.graph.node_count());
    const double d = n > 0 ? 2.0 * static_cast<double>(h.size()) / n : 0.0;
    json["average_degree"] = d;
    json["core_edges"] = core_edges(doc.graph, h).size();
    emit_json(fl.out, json);
    return ok;
}

int run_analyze_lemmas(const Flags& fl) {
    Document doc = read_document(fl.input);
    Emulator h = doc.emulator();
    const std::size_t k = pick(fl.k, doc.k, "k");
    const std::size_t f = fl.f ? *fl.f : h.max_witness_size();
    BlockingSet blocks = blocks_of(doc, h);
    ScumOptions options;
    options.budget_paths = fl.budget_paths;
    StructureReport report = check_structure_lemmas(doc.graph, h, blocks, k, f, options);
    Json json = to_json(report);
    json["k"] = k;
    json["f"] = f;
    emit_json(fl.out, json);
    if (!report.preconditions_met) {
        std::cerr << "preconditions not met: " << report.precondition_note << '\n';
        return input_error;
    }
    return report.passed() ? ok : verification_failed;
}

void print_ids(const std::string& path, const FaultSet& faults) {
    std::ostringstream out;
    for (std::size_t i = 0; i < faults.size(); ++i) {
        out << (i ? " " : "") << faults.members()[i];
    }
    out << '\n';
    write_text_file(path, out.str());
}

int run_lbdc(const std::string& mode, const Flags& fl) {
    Document doc = read_document(fl.input);
    std::vector<char> allowed;
    if (doc.has_emulator()) {
        Emulator h = doc.emulator();
        allowed.assign(h.mask().begin(), h.mask().end());
    }
    LbdcInstance inst(doc.graph, fl.u, fl.v, fl.t, fl.ell, std::move(allowed));
    if (mode == "test") {
        FaultSet faults(fl.faults);
        LbdcTest test = test_feasible(inst, faults);
        emit_json(fl.out, to_json(test));
        return test.feasible ? ok : verification_failed;
    }
    if (mode == "approx") {
        LbdcApproximation approx = approximate(inst);
        print_ids(fl.out, approx.faults);
        return ok;
    }
    auto result = brute_optimal(inst, fl.cap, fl.budget_faultsets);
    if (auto* budget = std::get_if<LbdcOracleBudget>(&result)) {
        throw BudgetExceeded("optimal LBDC search needs " + std::to_string(budget->family_size)
                             + " candidate sets");
    }
    const auto& best = std::get<std::optional<FaultSet>>(result);
    if (!best) {
        throw BudgetExceeded("no feasible cut with at most " + std::to_string(fl.cap) + " edges");
    }
    print_ids(fl.out, *best);
    return ok;
}

int run_lower_bound(const std::string& mode, const Flags& fl) {
    if (mode == "dense") {
        if (!fl.f) {
            throw InputError("lower-bound dense needs --f");
        }
        std::ostringstream out;
        write_graph(out, dense_lb_instance(fl.n, *fl.f, fl.seed));
        write_text_file(fl.out, out.str());
        return ok;
    }
    if (mode == "k2") {
        if (!fl.f) {
            throw InputError("lower-bound k2 needs --f");
        }
        CloudGraph lb = k2_lb_graph(fl.q, *fl.f);
        std::ostringstream out;
        write_graph(out, lb.graph);
        write_clouds(out, lb);
        write_text_file(fl.out, out.str());
        return ok;
    }
    // attack
    Document doc = read_document(fl.input);
    CloudGraph lb = doc.cloud_graph();
    Emulator h = doc.has_emulator() ? doc.emulator() : Emulator::complete(doc.graph);
    if (fl.edge.size() != 2) {
        throw InputError("--edge takes two node ids");
    }
    auto e = doc.graph.find_edge(fl.edge[0], fl.edge[1]);
    if (!e) {
        throw InputError("no edge between " + std::to_string(fl.edge[0]) + " and "
                         + std::to_string(fl.edge[1]));
    }
    AdversarialFaults attack = k2_adversarial_faults(lb, h, *e);
    ReweightedView view = reweight(doc.graph, h, attack.all);
    const Edge& edge = doc.graph.edge(*e);
    const Length d = dist(doc.graph, FaultSet{}, edge.a, edge.b, view.weights);
    Json json = to_json(attack);
    json["edge"] = *e;
    json["in_emulator"] = h.contains(*e);
    json["distance"] = length_json(d);
    json["exceeds_3"] = exceeds(d, 3.0 * edge.weight);
    emit_json(fl.out, json);
    return ok;
}

int run_bench_cmd(const Flags& fl) {
    BenchSuite suite = parse_bench_suite(read_text(fl.input));
    BenchReport report = run_bench(suite, &std::cerr);
    emit_json(fl.out, to_json(report));
    if (!fl.csv.empty()) {
        write_text_file(fl.csv, to_csv(report));
    }
    return ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerant emulator construction and verification"};
    app.require_subcommand(1);
    Flags fl;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", fl.input, "input file, - for stdin")->capture_default_str();
        sub->add_option("--out,-o", fl.out, "output file, - for stdout")->capture_default_str();
    };
    auto add_fk = [&](CLI::App* sub) {
        sub->add_option("--f", fl.f, "fault budget")->check(CLI::NonNegativeNumber);
        sub->add_option("--k", fl.k, "stretch parameter, t = 2k-1")->check(CLI::PositiveNumber);
    };

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("kind", fl.kind, "gnp|regular|cycle|path|complete|incidence")->required();
    gen->add_option("--n", fl.n, "node count");
    gen->add_option("--p", fl.p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--degree", fl.degree, "degree of a random regular graph");
    gen->add_option("--q", fl.q, "prime order of the projective plane");
    gen->add_option("--max-weight", fl.max_weight, "weights drawn from 1..max")
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", fl.seed, "random seed");
    gen->add_option("--out,-o", fl.out, "output file");

    auto* build = app.add_subcommand("build", "build an f-EFT emulator");
    add_input(build);
    add_fk(build);
    build->add_option("--algo", fl.algo, "exact|poly")->check(CLI::IsMember({"exact", "poly"}));
    build->add_option("--budget-faultsets", fl.budget_faultsets, "per-edge search budget")
        ->check(CLI::PositiveNumber);
    build->add_option("--order", fl.order, "fault-set search order: lex|reverse");
    build->add_option("--threads", fl.threads, "worker threads, 0 for the default");

    auto* verify = app.add_subcommand("verify", "verify an emulator");
    add_input(verify);
    add_fk(verify);
    verify->add_option("--strategy", fl.strategy, "exhaustive|sampled|isolation")
        ->check(CLI::IsMember({"exhaustive", "sampled", "isolation"}));
    verify->add_option("--trials", fl.trials, "sampled fault sets")->check(CLI::PositiveNumber);
    verify->add_option("--seed", fl.seed, "sampling seed");
    verify->add_option("--budget-faultsets", fl.budget_faultsets, "exhaustive budget")
        ->check(CLI::PositiveNumber);
    verify->add_option("--scope", fl.scope, "edges|all");
    verify->add_option("--threads", fl.threads, "worker threads, 0 for the default");

    auto* analyze = app.add_subcommand("analyze", "blocking sets and path structure");
    analyze->require_subcommand(1);
    auto* blocking = analyze->add_subcommand("blocking", "extract and validate a blocking set");
    add_input(blocking);
    add_fk(blocking);
    blocking->add_flag("--clean", fl.do_clean, "also run the cleaning transformation");
    blocking->add_option("--budget-cycles", fl.budget_cycles, "longest cycle to enumerate")
        ->check(CLI::PositiveNumber);
    blocking->add_option("--emit-doc", fl.emit_doc, "write the input plus a BLOCKS section");
    auto* scum = analyze->add_subcommand("scum", "count SCUM paths");
    add_input(scum);
    scum->add_option("--k", fl.k, "path length")->check(CLI::PositiveNumber);
    scum->add_flag("--emit-paths", fl.emit_paths, "list the paths");
    scum->add_option("--budget-paths", fl.budget_paths, "partial paths explored")
        ->check(CLI::PositiveNumber);
    auto* lemmas = analyze->add_subcommand("lemmas", "check the structure lemmas");
    add_input(lemmas);
    add_fk(lemmas);
    lemmas->add_option("--budget-paths", fl.budget_paths, "partial paths explored")
        ->check(CLI::PositiveNumber);

    auto* lbdc = app.add_subcommand("lbdc", "length-bounded double cuts");
    lbdc->require_subcommand(1);
    std::vector<CLI::App*> lbdc_modes;
    for (const char* mode : {"test", "approx", "opt"}) {
        auto* sub = lbdc->add_subcommand(mode);
        add_input(sub);
        sub->add_option("--u", fl.u)->required();
        sub->add_option("--v", fl.v)->required();
        sub->add_option("--t", fl.t)->required();
        sub->add_option("--ell", fl.ell)->required();
        lbdc_modes.push_back(sub);
    }
    lbdc_modes[0]->add_option("--faults", fl.faults, "candidate cut, edge ids");
    lbdc_modes[2]->add_option("--cap", fl.cap, "largest cut size tried");
    lbdc_modes[2]->add_option("--budget-faultsets", fl.budget_faultsets, "candidate set budget")
        ->check(CLI::PositiveNumber);

    auto* lower = app.add_subcommand("lower-bound", "lower-bound instances");
    lower->require_subcommand(1);
    auto* dense = lower->add_subcommand("dense", "random f/2-regular graph");
    dense->add_option("--n", fl.n)->required();
    dense->add_option("--f", fl.f)->required();
    dense->add_option("--seed", fl.seed);
    dense->add_option("--out,-o", fl.out);
    auto* k2 = lower->add_subcommand("k2", "cloud blow-up of a projective plane");
    k2->add_option("--q", fl.q)->required();
    k2->add_option("--f", fl.f)->required();
    k2->add_option("--out,-o", fl.out);
    auto* attack = lower->add_subcommand("attack", "adversarial fault set of a bundle edge");
    add_input(attack);
    attack->add_option("--edge", fl.edge, "endpoints u v")->expected(2)->required();

    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    bench->add_option("suite", fl.input, "suite file (JSON)")->required();
    bench->add_option("--out,-o", fl.out, "JSON report");
    bench->add_option("--csv", fl.csv, "CSV report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (gen->parsed()) return run_gen(fl);
        if (build->parsed()) return run_build(fl);
        if (verify->parsed()) return run_verify(fl);
        if (blocking->parsed()) return run_analyze_blocking(fl);
        if (scum->parsed()) return run_analyze_scum(fl);
        if (lemmas->parsed()) return run_analyze_lemmas(fl);
        for (auto* sub : lbdc_modes) {
            if (sub->parsed()) return run_lbdc(sub->get_name(), fl);
        }
        if (dense->parsed()) return run_lower_bound("dense", fl);
        if (k2->parsed()) return run_lower_bound("k2", fl);
        if (attack->parsed()) return run_lower_bound("attack", fl);
        if (bench->parsed()) return run_bench_cmd(fl);
    } catch (const InputError& err) {
        std::cerr << "input error: " << err.what() << '\n';
        return input_error;
    } catch (const BudgetExceeded& err) {
        std::cerr << "budget exceeded: " << err.what() << '\n';
        return budget_exceeded;
    }
    return ok;
}
