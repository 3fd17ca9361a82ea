// Acceptance driver: one line per criterion, exit status 1 if any is red.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "eft/bench.hpp"
#include "eft/blocking.hpp"
#include "eft/emulator.hpp"
#include "eft/generators.hpp"
#include "eft/greedy_exact.hpp"
#include "eft/greedy_poly.hpp"
#include "eft/lbdc.hpp"
#include "eft/lower_bound.hpp"
#include "eft/scum.hpp"
#include "oracles.hpp"

using namespace eft;

namespace {

// pinned limits
constexpr double kCorpusSeconds = 600.0;
constexpr double kLbdcSeconds = 300.0;
constexpr double kBenchSeconds = 1800.0;
constexpr double kUnitSeconds = 1200.0;
constexpr std::size_t kLbdcInstances = 200;
constexpr std::size_t kLbdcMaxEdges = 14;
constexpr std::size_t kDenseTrials = 1000;
constexpr double kDensityFactor = 8.0;
constexpr std::size_t kCorpusMin = 50;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Run {
    std::string instance;
    const Graph* graph;
    std::size_t f;
    std::size_t k;
    Emulator h;
};

std::vector<corpus::Instance> instances;
std::vector<Run> exact_runs;
std::vector<Run> poly_runs;

std::string describe(const Run& r) {
    std::ostringstream out;
    out << r.instance << " f=" << r.f << " k=" << r.k;
    return out.str();
}

Outcome corpus_correctness(bool poly) {
    Outcome out;
    auto start = Clock::now();
    std::size_t failures = 0;
    std::uint64_t sets = 0;
    std::string first;
    for (const auto& inst : instances) {
        for (std::size_t f = 0; f <= 2; ++f) {
            for (std::size_t k : {2, 3}) {
                Emulator h = poly ? build_poly(inst.graph, f, k) : build_exact(inst.graph, f, k);
                auto report = verify_eft(inst.graph, h, f, static_cast<double>(2 * k - 1));
                sets += report.sets_checked;
                Run run{inst.name, &inst.graph, f, k, h};
                if (report.verdict != Verdict::pass) {
                    if (failures++ == 0) {
                        first = describe(run) + " " + to_string(report.verdict);
                    }
                }
                (poly ? poly_runs : exact_runs).push_back(std::move(run));
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << instances.size() << " instances, " << (poly ? poly_runs : exact_runs).size()
      << " builds, " << sets << " fault sets checked, " << failures << " not PASS";
    if (!first.empty()) {
        d << " (first: " << first << ")";
    }
    d << ", " << elapsed << "s";
    out.ok = failures == 0 && instances.size() >= kCorpusMin && elapsed < kCorpusSeconds;
    out.detail = d.str();
    return out;
}

Outcome f0_equivalence() {
    std::size_t exact_bad = 0, poly_bad_unit = 0, poly_bad_weighted = 0, compared = 0;
    std::string first;
    for (const auto& inst : instances) {
        for (std::size_t k : {2, 3}) {
            const std::uint64_t expect = oracle::greedy_spanner(inst.graph, 2.0 * k - 1);
            const std::uint64_t ex = oracle::to_mask(build_exact(inst.graph, 0, k).members());
            const std::uint64_t po = oracle::to_mask(build_poly(inst.graph, 0, k).members());
            compared += 2;
            if (ex != expect) {
                ++exact_bad;
                if (first.empty()) {
                    first = inst.name + " exact k=" + std::to_string(k);
                }
            }
            if (po != expect) {
                ++(inst.weighted ? poly_bad_weighted : poly_bad_unit);
                if (first.empty()) {
                    first = inst.name + " poly k=" + std::to_string(k);
                }
            }
        }
    }
    std::ostringstream d;
    d << compared << " builds; mismatches exact=" << exact_bad << " poly(unit)=" << poly_bad_unit
      << " poly(weighted)=" << poly_bad_weighted;
    if (!first.empty()) {
        d << " (first: " << first << ")";
    }
    return {exact_bad + poly_bad_unit + poly_bad_weighted == 0, d.str()};
}

Outcome blocking_lemmas() {
    std::size_t invalid = 0, oversize = 0, runs = 0;
    std::string first;
    for (const Run& r : exact_runs) {
        ++runs;
        BlockingSet b = extract_blocking(r.h);
        if (validate_double_blocking(*r.graph, r.h, b, r.k)) {
            ++invalid;
            first = first.empty() ? describe(r) + " exact invalid" : first;
        }
        if (b.size() > r.f * r.h.size()) {
            ++oversize;
            first = first.empty() ? describe(r) + " exact oversize" : first;
        }
    }
    for (const Run& r : poly_runs) {
        ++runs;
        BlockingSet b = extract_blocking(r.h);
        if (b.size() > (2 * r.k - 1) * r.f * r.h.size()) {
            ++oversize;
            first = first.empty() ? describe(r) + " poly oversize" : first;
        }
    }
    std::ostringstream d;
    d << runs << " runs, " << invalid << " invalid, " << oversize << " oversize";
    if (!first.empty()) {
        d << " (first: " << first << ")";
    }
    return {invalid + oversize == 0 && runs > 0, d.str()};
}

Outcome lbdc_ratio() {
    auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::size_t done = 0, infeasible = 0, over = 0, disagree = 0, nonzero = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; done < kLbdcInstances; ++seed) {
        const std::size_t n = 4 + seed % 7;
        Graph g = make_gnp(n, 0.3 + 0.05 * static_cast<double>(seed % 6), 900 + seed);
        if (g.edge_count() == 0 || g.edge_count() > kLbdcMaxEdges) {
            continue;
        }
        const NodeId u = static_cast<NodeId>(uniform_below(rng, n));
        NodeId v = static_cast<NodeId>(uniform_below(rng, n - 1));
        v += v >= u;
        const std::size_t ell = 1 + uniform_below(rng, 3);
        const std::size_t t = ell + 1 + uniform_below(rng, 3);
        LbdcInstance inst(g, u, v, t, ell);
        const std::size_t opt = oracle::lbdc_optimum(g, u, v, t, ell, ~std::uint64_t{0});
        auto lib = brute_optimal(inst, g.edge_count());
        const auto* found = std::get_if<std::optional<FaultSet>>(&lib);
        if (!found || !*found || (*found)->size() != opt) {
            ++disagree;
        }
        LbdcApproximation approx = approximate(inst);
        if (!test_feasible(inst, approx.faults).feasible
            || !oracle::lbdc_feasible(g, u, v, t, ell, oracle::to_mask(approx.faults.members()),
                                      ~std::uint64_t{0})) {
            ++infeasible;
        }
        if (approx.faults.size() > t * opt) {
            ++over;
        }
        if (opt > 0) {
            ++nonzero;
            worst = std::max(worst, static_cast<double>(approx.faults.size()) / opt);
        }
        ++done;
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << done << " instances (" << nonzero << " with F* nonempty), " << infeasible
      << " infeasible, " << over << " over t|F*|, " << disagree
      << " library/oracle optimum mismatches, worst ratio " << worst << ", " << elapsed << "s";
    return {infeasible + over + disagree == 0 && elapsed < kLbdcSeconds, d.str()};
}

Outcome dense_lower_bound() {
    std::size_t graphs = 0, omissions = 0, missed = 0, big = 0, sampled_fail = 0;
    for (std::size_t n : {8, 12, 16}) {
        for (std::size_t f : {4, 6}) {
            Graph g = dense_lb_instance(n, f, 100 * n + f);
            ++graphs;
            const double t = 3.0;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                FaultSet F = isolation_fault_set(g, e);
                big += F.size() != f - 2;
                std::vector<EdgeId> rest;
                for (EdgeId x = 0; x < g.edge_count(); ++x) {
                    if (x != e) {
                        rest.push_back(x);
                    }
                }
                Emulator h(g, rest);
                ++omissions;
                const bool caught = stretch_ok_under(g, h, F, t).has_value();
                auto report = verify_eft(g, h, f, t, {.strategy = StrategyKind::isolation});
                missed += !caught || report.verdict != Verdict::fail;
            }
            auto full = verify_eft(g, Emulator::complete(g), f, t,
                                   {.strategy = StrategyKind::sampled, .trials = kDenseTrials,
                                    .seed = n * 7 + f});
            sampled_fail += full.verdict != Verdict::pass;
        }
    }
    std::ostringstream d;
    d << graphs << " graphs, " << omissions << " single-edge omissions, " << missed
      << " not caught, " << big << " isolation sets of wrong size, complete emulator not PASS on "
      << sampled_fail;
    return {missed + big + sampled_fail == 0, d.str()};
}

Outcome k2_claim() {
    std::mt19937_64 rng(8);
    std::size_t checked = 0, violated = 0, families = 0;
    for (std::size_t f : {1, 2}) {
        CloudGraph lb = k2_lb_graph(2, f);
        const Graph& g = lb.graph;
        std::vector<Emulator> family = {Emulator(g), build_poly(g, f, 2), build_poly(g, 1, 2)};
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            std::vector<EdgeId> rest;
            for (EdgeId x = 0; x < g.edge_count(); ++x) {
                if (x != e) {
                    rest.push_back(x);
                }
            }
            family.emplace_back(g, rest);
        }
        for (int i = 0; i < 30; ++i) {
            std::vector<EdgeId> members;
            for (EdgeId x = 0; x < g.edge_count(); ++x) {
                if (uniform_below(rng, 2) == 0) {
                    members.push_back(x);
                }
            }
            family.emplace_back(g, members);
        }
        families += family.size();
        for (const Emulator& h : family) {
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (h.contains(e)) {
                    continue;
                }
                std::size_t missing = 0;
                for (EdgeId x = 0; x < g.edge_count(); ++x) {
                    missing += lb.bundle_of[x] == lb.bundle_of[e] && !h.contains(x);
                }
                AdversarialFaults attack = k2_adversarial_faults(lb, h, e);
                if (2 * missing < f * f || attack.z_u.size() > f || attack.z_v.size() > f) {
                    continue;
                }
                ReweightedView view = reweight(g, h, attack.all);
                ++checked;
                violated += !exceeds(dist(g, {}, g.edge(e).a, g.edge(e).b, view.weights), 3.0);
            }
        }
    }
    std::ostringstream d;
    d << families << " emulators, " << checked << " (H, e) pairs under the hypotheses, "
      << violated << " with dist <= 3";
    return {violated == 0 && checked > 0, d.str()};
}

Outcome structure_lemmas() {
    std::size_t runs = 0, unmet = 0, failed = 0;
    std::size_t worst_two_paths = 0;
    std::string first;
    auto check = [&](const Run& r, std::size_t f_lemma, const char* algo) {
        if (r.k != 3) {
            return;
        }
        ++runs;
        StructureReport rep = check_structure_lemmas(*r.graph, r.h, extract_blocking(r.h), 3, f_lemma);
        worst_two_paths = std::max(worst_two_paths, rep.max_two_paths);
        if (!rep.preconditions_met) {
            ++unmet;
        } else if (!rep.passed()) {
            ++failed;
        }
        if (!rep.passed() && first.empty()) {
            first = describe(r) + " " + algo;
        }
    };
    for (const Run& r : exact_runs) {
        check(r, r.f, "exact");
    }
    // poly witnesses may hold up to (2k-1)f edges
    for (const Run& r : poly_runs) {
        check(r, 5 * r.f, "poly");
    }
    std::ostringstream d;
    d << runs << " emulators, " << unmet << " preconditions unmet, " << failed
      << " assertion failures, max 2-paths per pair " << worst_two_paths;
    if (!first.empty()) {
        d << " (first: " << first << ")";
    }
    return {unmet + failed == 0 && runs > 0, d.str()};
}

Outcome density_trend() {
    auto start = Clock::now();
    BenchSuite suite = parse_bench_suite(R"js({"families": [{"name": "gnp", "kind": "gnp",
        "p": 0.15, "max_weight": 1, "n": [50, 100, 200], "f": [0, 1, 2, "ceil(n^2/9)"],
        "k": [3], "algo": ["poly"], "strategy": "sampled", "trials": 200, "seed": 11}]})js");
    BenchReport report = run_bench(suite);
    const double elapsed = seconds_since(start);
    bool ok = true;
    std::ostringstream d;
    for (std::size_t n : {50, 100, 200}) {
        const std::size_t top = parse_fault_spec("ceil(n^2/9)").resolve(n);
        const BenchRow* base = nullptr;
        const BenchRow* high = nullptr;
        for (const BenchRow& row : report.rows) {
            ok = ok && row.error.empty();
            if (row.n == n && row.f == 0) {
                base = &row;
            }
            if (row.n == n && row.f == top) {
                high = &row;
            }
        }
        if (!base || !high || base->density <= 0.0) {
            ok = false;
            d << "n=" << n << " missing rows; ";
            continue;
        }
        const double ratio = high->density / base->density;
        ok = ok && ratio <= kDensityFactor;
        d << "n=" << n << " f=" << top << " ratio " << ratio << "; ";
    }
    d << report.rows.size() << " rows, " << elapsed << "s";
    return {ok && elapsed < kBenchSeconds, d.str()};
}

Outcome unit_suite() {
    auto start = Clock::now();
    const std::string cmd = std::string("\"") + EFT_UNIT_BINARY + "\" --no-intro=true --minimal=true";
    const int status = std::system(cmd.c_str());
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "exit status " << status << ", " << elapsed << "s";
    return {status == 0 && elapsed < kUnitSeconds, d.str()};
}

}

int main() {
    instances = corpus::small_instances();
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "exact builder passes exhaustive verification on the corpus",
         [] { return corpus_correctness(false); }},
        {2, "poly builder passes exhaustive verification on the corpus",
         [] { return corpus_correctness(true); }},
        {3, "f=0 builds equal the classical greedy spanner", f0_equivalence},
        {4, "blocking sets are valid and within size bounds", blocking_lemmas},
        {5, "LBDC approximation is feasible and within t of optimal", lbdc_ratio},
        {6, "dense f/2-regular lower bound", dense_lower_bound},
        {7, "k=2 cloud lower bound claim", k2_claim},
        {8, "structure lemmas on every k=3 corpus emulator", structure_lemmas},
        {9, "density at f=ceil(n^2/9) within 8x of f=0", density_trend},
        {10, "unit and property suites pass headless", unit_suite},
    };
    int red = 0;
    for (const auto& c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& err) {
            o = {false, std::string("exception: ") + err.what()};
        }
        red += !o.ok;
        std::printf("[%s] %d %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - red,
                criteria.size());
    return red == 0 ? 0 : 1;
}
