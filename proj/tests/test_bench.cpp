#include <doctest.h>

#include <sstream>

#include "eft/bench.hpp"
#include "eft/generators.hpp"
#include "oracles.hpp"

using namespace eft;

TEST_CASE("fault budget parsing") {
    CHECK(parse_fault_spec("3").resolve(100) == 3);
    FaultSpec s = parse_fault_spec("ceil(n^2/9)");
    CHECK(s.scaled());
    CHECK(s.resolve(50) == 3);   // 50^(2/9) = 2.38
    CHECK(s.resolve(200) == 4);  // 3.24
    CHECK(s.resolve(512) == 4);  // exactly 4
    CHECK(s.label() == "ceil(n^2/9)");
    CHECK_THROWS_AS(parse_fault_spec("n^2"), InputError);
    CHECK_THROWS_AS(parse_fault_spec("ceil(n^2/0)"), InputError);
    CHECK_THROWS_AS(parse_fault_spec("-1"), InputError);
}

TEST_CASE("suite parsing") {
    BenchSuite empty = parse_bench_suite(R"({"families": []})");
    CHECK(empty.families.empty());
    CHECK(run_bench(empty).rows.empty());
    BenchSuite one = parse_bench_suite(
        R"({"families": [{"name": "c", "kind": "cycle", "n": [5], "f": [1], "algo": ["exact"]}]})");
    REQUIRE(one.families.size() == 1);
    CHECK(one.families[0].ks == std::vector<std::size_t>{3});
    CHECK(one.families[0].verify.strategy == StrategyKind::sampled);
    CHECK_THROWS_AS(parse_bench_suite(R"({"families": [{"name": "c", "colour": 1}]})"), InputError);
    CHECK_THROWS_AS(parse_bench_suite(R"({"rows": []})"), InputError);
    CHECK_THROWS_AS(parse_bench_suite("{"), InputError);
    CHECK_THROWS_AS(parse_bench_suite(R"({"families": [{"name": "c", "kind": "torus"}]})"),
                    InputError);
}

TEST_CASE("classical greedy spanner agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = make_gnp(5 + seed % 6, 0.45, seed, seed % 2 ? 6 : 1);
        for (double t : {1.0, 3.0, 5.0}) {
            CHECK(oracle::to_mask(classical_greedy_spanner(g, t)) == oracle::greedy_spanner(g, t));
        }
    }
}

TEST_CASE("small gnp suite passes and is deterministic") {
    const std::string text = R"({"families": [{"name": "gnp", "kind": "gnp", "p": 0.15,
        "n": [20, 40, 80], "f": [0, 1, 2], "k": [3], "algo": ["poly"],
        "strategy": "sampled", "trials": 200, "seed": 7}]})";
    BenchSuite suite = parse_bench_suite(text);
    BenchReport a = run_bench(suite);
    REQUIRE(a.rows.size() == 9);
    for (const BenchRow& row : a.rows) {
        CHECK(row.error.empty());
        REQUIRE(row.verification);
        CHECK(row.verification->verdict == Verdict::pass);
        CHECK(row.verification->strategy == StrategyKind::sampled);
        if (row.f == 0) {
            REQUIRE(row.baseline_match);
            CHECK(*row.baseline_match);
        }
    }
    CHECK(a.rows[0].n == 20);
    CHECK(a.rows[1].f == 1);
    BenchReport b = run_bench(suite);
    CHECK(to_json(a)["rows"] == to_json(b)["rows"]);
    const std::string csv = to_csv(a);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}
