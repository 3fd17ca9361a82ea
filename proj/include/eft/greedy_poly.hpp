#ifndef EFT_GREEDY_POLY_HPP
#define EFT_GREEDY_POLY_HPP

#include "eft/emulator.hpp"
#include "eft/graph.hpp"

namespace eft {

/*
 * Polynomial-time greedy f-EFT (2k-1)-emulator. Each candidate (u, v) is
 * tested with the LBDC approximation on the current H read as an
 * unweighted graph, with t = 2k-1 and ell = k; the edge is inserted when
 * the returned cut has at most (2k-1) f edges, and that cut becomes its
 * witness. Requires k >= 2.
 */
Emulator build_poly(const Graph& g, std::size_t f, std::size_t k);

}

#endif /* EFT_GREEDY_POLY_HPP */
