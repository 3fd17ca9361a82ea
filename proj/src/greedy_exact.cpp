#include "eft/greedy_exact.hpp"

#include <algorithm>
#include <functional>

#include "eft/parallel.hpp"

namespace eft {

namespace {

FaultSearchResult search(const Reweighter& prototype, const Emulator& h, EdgeId e,
                         std::size_t f, std::size_t k, const ExactOptions& options) {
    const Graph& g = prototype.graph();
    const std::size_t m = g.edge_count();
    const std::size_t size = std::min(f, m - 1);

    std::vector<EdgeId> candidates;
    for (EdgeId x = 0; x < m; ++x) {
        if (x != e) {
            candidates.push_back(x);
        }
    }
    if (options.order == SearchOrder::reverse_lexicographic) {
        std::reverse(candidates.begin(), candidates.end());
    }
    const std::uint64_t family = binomial(candidates.size(), size);
    if (family > options.budget_faultsets) {
        return SearchBudgetExceeded{family};
    }

    std::vector<EdgeId> combo(size);
    for (std::size_t i = 0; i < size; ++i) {
        combo[i] = static_cast<EdgeId>(i);
    }
    bool first = true;
    std::function<bool(FaultSet&)> next = [&](FaultSet& out) {
        if (!first && !next_combination(combo, candidates.size())) {
            return false;
        }
        first = false;
        std::vector<EdgeId> members(size);
        for (std::size_t i = 0; i < size; ++i) {
            members[i] = candidates[combo[i]];
        }
        out = FaultSet(std::move(members));
        return true;
    };

    const Edge& edge = g.edge(e);
    const Length bound = static_cast<double>(2 * k - 1) * edge.weight;
    // every node within the tolerance band of `bound` gets settled
    const Length cutoff = bound + 1e-8 * std::max(1.0, bound);
    auto make_worker = [&]() {
        return [rw = Reweighter(prototype), weights = std::vector<Length>(),
                mask = std::vector<char>(), &h, &edge, bound, cutoff, m](const FaultSet& faults) mutable {
            mask = faults.mask(m);
            rw.reweight(h, mask, weights);
            return exceeds(rw.emulator_distance(weights, edge.a, edge.b, cutoff), bound);
        };
    };
    const std::size_t threads = options.threads ? options.threads : default_parallelism();
    FirstMatch<FaultSet> found = find_first<FaultSet>(next, make_worker, threads);
    if (found.item) {
        return std::move(*found.item);
    }
    return NoViolation{};
}

void check_parameters(std::size_t k) {
    if (k < 1) {
        throw InputError("k must be a positive integer");
    }
}

}

FaultSearchResult find_violating_fault_set(const Graph& g, const Emulator& h, EdgeId e,
                                           std::size_t f, std::size_t k,
                                           const ExactOptions& options) {
    check_parameters(k);
    h.require_base(g);
    g.require_edge(e);
    if (h.contains(e)) {
        throw InputError("candidate edge " + std::to_string(e) + " is already in the emulator");
    }
    Reweighter prototype(g);
    return search(prototype, h, e, f, k, options);
}

Emulator build_exact(const Graph& g, std::size_t f, std::size_t k, const ExactOptions& options) {
    check_parameters(k);
    Emulator h(g);
    Reweighter prototype(g);
    for (EdgeId e : h.ordering().permutation()) {
        FaultSearchResult result = search(prototype, h, e, f, k, options);
        if (auto* faults = std::get_if<FaultSet>(&result)) {
            h.add(e, std::move(*faults));
        } else if (auto* over = std::get_if<SearchBudgetExceeded>(&result)) {
            throw BudgetExceeded("exact search for edge " + std::to_string(e) + " needs "
                                 + std::to_string(over->family_size)
                                 + " fault sets, above the budget of "
                                 + std::to_string(options.budget_faultsets));
        }
    }
    return h;
}

}
