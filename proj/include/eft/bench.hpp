#ifndef EFT_BENCH_HPP
#define EFT_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eft/emulator.hpp"
#include "eft/generators.hpp"
#include "eft/report.hpp"

namespace eft {

// a fault budget: a constant, or ceil(n^(num/den)) evaluated per row
struct FaultSpec {
    std::size_t value = 0;
    std::uint32_t num = 0;
    std::uint32_t den = 0;

    bool scaled() const { return den != 0; }
    std::size_t resolve(std::size_t n) const;
    std::string label() const;
};

FaultSpec parse_fault_spec(const std::string& text);

struct BenchFamily {
    std::string name;
    GraphKind kind = GraphKind::gnp;
    GeneratorParams params;  // n is taken from `sizes`
    std::vector<std::size_t> sizes;
    std::vector<FaultSpec> faults;
    std::vector<std::size_t> ks;
    std::vector<std::string> algos;
    VerifyOptions verify;
    std::uint64_t seed = 1;
    std::uint64_t budget_faultsets = 10'000'000;  // exact builder only
};

struct BenchSuite {
    std::vector<BenchFamily> families;
};

/*
 * Suite file, JSON:
 *   {"families": [{"name": "gnp", "kind": "gnp", "p": 0.15, "max_weight": 1,
 *     "n": [20, 40], "f": [0, 1, "ceil(n^2/9)"], "k": [3], "algo": ["poly"],
 *     "strategy": "sampled", "trials": 200, "seed": 7}]}
 * Throws InputError on unknown keys or bad values.
 */
BenchSuite parse_bench_suite(const std::string& text);

struct BenchRow {
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t f = 0;
    std::size_t k = 0;
    std::string algo;
    std::uint64_t seed = 0;
    std::size_t emulator_edges = 0;
    std::size_t blocks = 0;
    double density = 0.0;  // |E(H)| / n^(1 + 1/k)
    std::optional<VerificationReport> verification;
    std::optional<std::size_t> baseline_edges;  // classical greedy, f = 0 rows
    std::optional<bool> baseline_match;
    std::string error;
    double build_seconds = 0.0;
    double verify_seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// Rows in suite order. Row failures are recorded and the run continues.
BenchReport run_bench(const BenchSuite& suite, std::ostream* progress = nullptr);

// timing fields live under a separate top-level "timings" array
Json to_json(const BenchReport& report);
std::string to_csv(const BenchReport& report);

/// Classical greedy t-spanner over the builders' edge ordering.
std::vector<EdgeId> classical_greedy_spanner(const Graph& g, double stretch);

}

#endif /* EFT_BENCH_HPP */
