#include "eft/greedy_poly.hpp"

#include "eft/lbdc.hpp"

namespace eft {

Emulator build_poly(const Graph& g, std::size_t f, std::size_t k) {
    if (k < 2) {
        throw InputError("the polynomial-time builder needs k >= 2 (LBDC requires 2k-1 > k)");
    }
    const std::size_t threshold = (2 * k - 1) * f;
    Emulator h(g);
    for (EdgeId e : h.ordering().permutation()) {
        const Edge& edge = g.edge(e);
        std::vector<char> current(h.mask().begin(), h.mask().end());
        LbdcInstance inst(g, edge.a, edge.b, 2 * k - 1, k, std::move(current));
        // the cut only grows, so stop as soon as it passes the threshold
        LbdcApproximation cut = approximate(inst, threshold);
        if (!cut.stopped_early && cut.faults.size() <= threshold) {
            h.add(e, std::move(cut.faults));
        }
    }
    return h;
}

}
