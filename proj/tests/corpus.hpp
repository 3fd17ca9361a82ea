// Small fixed instances shared by the unit tests and the acceptance run.
#pragma once

#include <string>
#include <vector>

#include "eft/generators.hpp"

namespace corpus {

struct Instance {
    std::string name;
    eft::Graph graph;
    bool weighted = false;
};

inline std::vector<Instance> small_instances() {
    using namespace eft;
    std::vector<Instance> out;
    for (std::size_t n = 3; n <= 10; ++n) {
        out.push_back({"cycle" + std::to_string(n), make_cycle(n), false});
    }
    for (std::size_t n = 3; n <= 6; ++n) {
        out.push_back({"complete" + std::to_string(n), make_complete(n), false});
    }
    out.push_back({"petersen", make_petersen(), false});
    out.push_back({"path6", make_path(6), false});
    out.push_back({"cycle6w", with_random_weights(make_cycle(6), 4, 11), true});
    out.push_back({"cycle8w", with_random_weights(make_cycle(8), 3, 12), true});
    out.push_back({"complete5w", with_random_weights(make_complete(5), 5, 13), true});
    out.push_back({"complete6w", with_random_weights(make_complete(6), 3, 14), true});

    // random graphs, redrawn until they fit in 20 edges
    auto gnp = [&](std::size_t count, std::uint32_t max_weight, std::uint64_t seed) {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t n = 5 + i % 6;
            const double p = 0.25 + 0.05 * static_cast<double>(i % 5);
            for (std::uint64_t s = seed + 100 * i;; ++s) {
                Graph g = make_gnp(n, p, s, max_weight);
                if (g.edge_count() >= 3 && g.edge_count() <= 20) {
                    out.push_back({"gnp" + std::string(max_weight > 1 ? "w" : "") + "_n"
                                       + std::to_string(n) + "_s" + std::to_string(s),
                                   std::move(g), max_weight > 1});
                    break;
                }
            }
        }
    };
    gnp(18, 1, 1000);
    gnp(18, 6, 5000);
    return out;
}

}
