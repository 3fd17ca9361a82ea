#ifndef EFT_GREEDY_EXACT_HPP
#define EFT_GREEDY_EXACT_HPP

#include <cstdint>
#include <optional>
#include <variant>

#include "eft/emulator.hpp"
#include "eft/graph.hpp"

namespace eft {

enum class SearchOrder { lexicographic, reverse_lexicographic };

struct ExactOptions {
    // largest fault-set family examined for a single candidate edge
    std::uint64_t budget_faultsets = 10'000'000;
    SearchOrder order = SearchOrder::lexicographic;
    std::size_t threads = 0;  // 0: default_parallelism()
};

struct NoViolation {};
struct SearchBudgetExceeded {
    std::uint64_t family_size = 0;
};

using FaultSearchResult = std::variant<FaultSet, NoViolation, SearchBudgetExceeded>;

/*
 * Looks for F in E(G) \ {e}, |F| <= f, with dist_{H^F}(u, v) exceeding
 * (2k-1) w(u, v). Only sets of size min(f, m-1) are enumerated; smaller
 * violators extend to one of those. The first violator in the configured
 * order is returned, independent of the thread count.
 */
FaultSearchResult find_violating_fault_set(const Graph& g, const Emulator& h, EdgeId e,
                                           std::size_t f, std::size_t k,
                                           const ExactOptions& options = {});

/// Greedy f-EFT (2k-1)-emulator over all fault sets. Witnesses record the
/// violating set behind each insertion. Throws BudgetExceeded.
Emulator build_exact(const Graph& g, std::size_t f, std::size_t k,
                     const ExactOptions& options = {});

}

#endif /* EFT_GREEDY_EXACT_HPP */
