#include <doctest.h>

#include "eft/generators.hpp"
#include "eft/greedy_exact.hpp"
#include "eft/greedy_poly.hpp"
#include "oracles.hpp"

using namespace eft;

namespace {

std::uint64_t mask_of(const Emulator& h) { return oracle::to_mask(h.members()); }

std::vector<Graph> small_graphs() {
    std::vector<Graph> out = {make_cycle(4), make_cycle(5), make_complete(4), make_complete(5),
                              make_petersen()};
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        Graph g = make_gnp(5 + seed % 4, 0.45, seed, seed % 2 == 0 ? 5 : 1);
        if (g.edge_count() <= 14) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

}

TEST_CASE("find_violating_fault_set examples") {
    Graph c4 = make_cycle(4);
    Emulator h(c4, {0, 1, 2});
    const EdgeId e30 = *c4.find_edge(3, 0);
    auto found = find_violating_fault_set(c4, h, e30, 1, 2);
    REQUIRE(std::holds_alternative<FaultSet>(found));
    const FaultSet& F = std::get<FaultSet>(found);
    CHECK(F.size() == 1);
    CHECK_FALSE(F.contains(e30));
    CHECK(exceeds(dist(c4, {}, 3, 0, reweight(c4, h, F).weights), 3));

    CHECK(std::holds_alternative<NoViolation>(find_violating_fault_set(c4, h, e30, 0, 2)));

    auto empty = find_violating_fault_set(c4, Emulator(c4), 0, 0, 2);
    REQUIRE(std::holds_alternative<FaultSet>(empty));
    CHECK(std::get<FaultSet>(empty).empty());

    ExactOptions tiny;
    tiny.budget_faultsets = 1;
    CHECK(std::holds_alternative<SearchBudgetExceeded>(
        find_violating_fault_set(c4, h, e30, 1, 2, tiny)));
    CHECK_THROWS_AS(build_exact(make_complete(6), 2, 2, tiny), BudgetExceeded);
}

TEST_CASE("the witness is the first violating set in lexicographic order") {
    Graph c4 = make_cycle(4);
    Emulator h(c4, {0, 1, 2});
    auto lex = find_violating_fault_set(c4, h, 3, 1, 2);
    auto rev = find_violating_fault_set(c4, h, 3, 1, 2,
                                        {.order = SearchOrder::reverse_lexicographic});
    // F = {(0,1)}, {(1,2)} and {(2,3)} all violate
    CHECK(std::get<FaultSet>(lex) == FaultSet{0});
    CHECK(std::get<FaultSet>(rev) == FaultSet{2});
}

TEST_CASE("build_exact examples") {
    Graph c4 = make_cycle(4);
    Emulator h0 = build_exact(c4, 0, 2);
    CHECK(h0.members() == std::vector<EdgeId>{0, 1, 2});
    CHECK(build_exact(c4, 1, 2).size() == 4);
    CHECK(build_exact(make_cycle(5), 0, 2).size() == 5);
    CHECK(build_exact(Graph(4, {}), 1, 2).size() == 0);
    // k = 1 keeps every edge that is a shortest path
    CHECK(build_exact(make_complete(5), 0, 1).size() == 10);
}

TEST_CASE("build_exact matches the brute-force greedy") {
    for (const Graph& g : small_graphs()) {
        for (std::size_t k : {1, 2, 3}) {
            for (std::size_t f = 0; f <= 2; ++f) {
                Emulator h = build_exact(g, f, k);
                CHECK(mask_of(h) == oracle::greedy_exact(g, f, k));
                for (EdgeId e : h.members()) {
                    const FaultSet* w = h.witness(e);
                    REQUIRE(w);
                    CHECK(w->size() <= f);
                    CHECK_FALSE(w->contains(e));
                }
            }
        }
    }
}

TEST_CASE("build_exact with f = 0 is the classical greedy spanner") {
    for (const Graph& g : small_graphs()) {
        for (std::size_t k : {1, 2, 3}) {
            CHECK(mask_of(build_exact(g, 0, k)) == oracle::greedy_spanner(g, 2.0 * k - 1));
        }
    }
}

TEST_CASE("build_exact: search order and threads do not change H; size grows with f") {
    for (const Graph& g : small_graphs()) {
        std::size_t previous = 0;
        for (std::size_t f = 0; f <= 3; ++f) {
            Emulator lex = build_exact(g, f, 2, {.threads = 1});
            Emulator rev = build_exact(g, f, 2, {.order = SearchOrder::reverse_lexicographic});
            Emulator par = build_exact(g, f, 2, {.threads = 3});
            CHECK(lex.members() == rev.members());
            CHECK(lex.members() == par.members());
            CHECK(lex.witnesses() == par.witnesses());
            CHECK(lex.size() >= previous);
            previous = lex.size();
        }
    }
}

TEST_CASE("build_poly examples") {
    Graph c4 = make_cycle(4);
    CHECK(build_poly(c4, 0, 2).size() == 3);
    Emulator h1 = build_poly(c4, 1, 2);
    CHECK(h1.size() == 4);
    const FaultSet* last = h1.witness(3);
    REQUIRE(last);
    CHECK(last->size() == 3);
    CHECK(build_poly(Graph(5, {}), 2, 2).size() == 0);
    CHECK_THROWS_AS(build_poly(c4, 1, 1), InputError);
}

TEST_CASE("build_poly output is an f-EFT emulator under the naive verifier") {
    for (const Graph& g : small_graphs()) {
        for (std::size_t k : {2, 3}) {
            for (std::size_t f = 0; f <= 2; ++f) {
                Emulator h = build_poly(g, f, k);
                CHECK(oracle::is_eft(g, mask_of(h), f, 2.0 * k - 1));
                for (EdgeId e : h.members()) {
                    REQUIRE(h.witness(e));
                    CHECK(h.witness(e)->size() <= (2 * k - 1) * f);
                    for (EdgeId x : *h.witness(e)) {
                        CHECK(h.contains(x));
                        CHECK(h.ordering().precedes(x, e));
                    }
                }
            }
        }
    }
}

TEST_CASE("build_poly with f = 0 keeps edges with no short hop path") {
    // unit weights: identical to the classical greedy spanner
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = make_gnp(9, 0.4, seed);
        if (g.edge_count() > 30) {
            continue;
        }
        for (std::size_t k : {2, 3}) {
            CHECK(mask_of(build_poly(g, 0, k)) == oracle::greedy_spanner(g, 2.0 * k - 1));
        }
    }
}
