#ifndef EFT_GENERATORS_HPP
#define EFT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "eft/graph.hpp"

namespace eft {

enum class GraphKind { gnp, random_regular, cycle, path, complete, incidence_bipartite };

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

struct GeneratorParams {
    std::size_t n = 0;           // node count (gnp, random_regular, cycle, path, complete)
    double p = 0.0;              // edge probability (gnp)
    std::size_t degree = 0;      // regularity (random_regular)
    std::size_t q = 0;           // projective plane order (incidence_bipartite)
    std::uint32_t max_weight = 1;  // weights drawn uniformly from 1..max_weight
};

/// Deterministic for a fixed (kind, params, seed). Throws InputError on
/// infeasible parameters.
Graph generate(GraphKind kind, const GeneratorParams& params, std::uint64_t seed);

Graph make_cycle(std::size_t n);
Graph make_path(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_gnp(std::size_t n, double p, std::uint64_t seed, std::uint32_t max_weight = 1);
Graph make_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed);

// point-line incidence graph of PG(2, q) for prime q: points are nodes
// 0..N-1 and lines are N..2N-1 with N = q^2 + q + 1
Graph make_incidence_bipartite(std::size_t q);

Graph make_petersen();

// copy of `graph` with weights redrawn uniformly from 1..max_weight
Graph with_random_weights(const Graph& graph, std::uint32_t max_weight, std::uint64_t seed);

bool is_prime(std::size_t q);

// portable draws on top of mt19937_64
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
double uniform_unit(std::mt19937_64& rng);

}

#endif /* EFT_GENERATORS_HPP */
