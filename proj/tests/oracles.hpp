// Brute-force reference implementations. Deliberately naive: dense
// matrices, bitmask subsets, permutations. Only the Graph container is
// shared with the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "eft/graph.hpp"

namespace oracle {

using eft::EdgeId;
using eft::Graph;
using eft::NodeId;

inline constexpr double inf = std::numeric_limits<double>::infinity();

using Matrix = std::vector<std::vector<double>>;

// Floyd-Warshall over per-edge weights (inf = absent)
inline Matrix apsp(const Graph& g, const std::vector<double>& w) {
    const std::size_t n = g.node_count();
    Matrix d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b, _] = g.edge(e);
        d[a][b] = std::min(d[a][b], w[e]);
        d[b][a] = std::min(d[b][a], w[e]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    return d;
}

inline std::vector<double> base_weights(const Graph& g, std::uint64_t faults = 0) {
    std::vector<double> w(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        w[e] = (faults >> e) & 1 ? inf : g.edge(e).weight;
    }
    return w;
}

// weights of H^F; `members` and `faults` are edge bitmasks
inline std::vector<double> reweighted(const Graph& g, std::uint64_t members, std::uint64_t faults) {
    Matrix d = apsp(g, base_weights(g, faults));
    std::vector<double> w(g.edge_count(), inf);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if ((members >> e) & 1) {
            w[e] = d[g.edge(e).a][g.edge(e).b];
        }
    }
    return w;
}

inline bool same_length(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b;
    }
    return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(b));
}

inline bool too_long(double achieved, double bound) {
    if (achieved == inf) {
        return bound != inf;
    }
    return achieved > bound * (1 + 1e-9) + 1e-12;
}

inline std::vector<std::uint64_t> subsets_up_to(std::size_t m, std::size_t f,
                                                std::uint64_t forbid = 0) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        if ((s & forbid) == 0 && static_cast<std::size_t>(std::popcount(s)) <= f) {
            out.push_back(s);
        }
    }
    return out;
}

// f-EFT t-emulator, checking every node pair under every fault set of size <= f
inline bool is_eft(const Graph& g, std::uint64_t members, std::size_t f, double t) {
    const std::size_t n = g.node_count();
    for (std::uint64_t faults : subsets_up_to(g.edge_count(), f)) {
        Matrix dg = apsp(g, base_weights(g, faults));
        Matrix dh = apsp(g, reweighted(g, members, faults));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (too_long(dh[i][j], t * dg[i][j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline std::vector<EdgeId> order(const Graph& g) {
    std::vector<EdgeId> ids(g.edge_count());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](EdgeId x, EdgeId y) {
        return g.edge(x).weight < g.edge(y).weight;
    });
    return ids;
}

inline std::uint64_t to_mask(const std::vector<EdgeId>& edges) {
    std::uint64_t m = 0;
    for (EdgeId e : edges) {
        m |= std::uint64_t{1} << e;
    }
    return m;
}

// exact greedy by brute force: every subset of size <= f of E \ {e}
inline std::uint64_t greedy_exact(const Graph& g, std::size_t f, std::size_t k) {
    std::uint64_t h = 0;
    for (EdgeId e : order(g)) {
        auto [a, b, w] = g.edge(e);
        for (std::uint64_t faults : subsets_up_to(g.edge_count(), f, std::uint64_t{1} << e)) {
            Matrix dh = apsp(g, reweighted(g, h, faults));
            if (too_long(dh[a][b], (2.0 * k - 1) * w)) {
                h |= std::uint64_t{1} << e;
                break;
            }
        }
    }
    return h;
}

// classical greedy t-spanner, distances recomputed from scratch
inline std::uint64_t greedy_spanner(const Graph& g, double t) {
    std::uint64_t h = 0;
    for (EdgeId e : order(g)) {
        auto [a, b, w] = g.edge(e);
        std::vector<double> weights(g.edge_count(), inf);
        for (EdgeId x = 0; x < g.edge_count(); ++x) {
            if ((h >> x) & 1) {
                weights[x] = g.edge(x).weight;
            }
        }
        if (too_long(apsp(g, weights)[a][b], t * w)) {
            h |= std::uint64_t{1} << e;
        }
    }
    return h;
}

// every simple cycle as its sorted edge-id list, found through vertex
// subsets and permutations
inline std::set<std::vector<EdgeId>> cycles(const Graph& g, std::size_t max_len,
                                            std::uint64_t allowed = ~std::uint64_t{0}) {
    const std::size_t n = g.node_count();
    std::map<std::pair<NodeId, NodeId>, EdgeId> edge_of;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if ((allowed >> e) & 1) {
            edge_of[{g.edge(e).a, g.edge(e).b}] = e;
            edge_of[{g.edge(e).b, g.edge(e).a}] = e;
        }
    }
    std::set<std::vector<EdgeId>> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<NodeId> nodes;
        for (NodeId x = 0; x < n; ++x) {
            if ((s >> x) & 1) {
                nodes.push_back(x);
            }
        }
        if (nodes.size() < 3 || nodes.size() > max_len) {
            continue;
        }
        std::vector<NodeId> rest(nodes.begin() + 1, nodes.end());
        do {
            std::vector<EdgeId> edges;
            bool ok = true;
            for (std::size_t i = 0; i < nodes.size() && ok; ++i) {
                NodeId x = i == 0 ? nodes[0] : rest[i - 1];
                NodeId y = i + 1 < nodes.size() ? rest[i] : nodes[0];
                auto it = edge_of.find({x, y});
                ok = it != edge_of.end();
                if (ok) {
                    edges.push_back(it->second);
                }
            }
            if (ok) {
                std::sort(edges.begin(), edges.end());
                out.insert(edges);
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

// all simple u-v paths of at most max_hops edges, as edge lists
inline std::vector<std::vector<EdgeId>> simple_paths(const Graph& g, NodeId u, NodeId v,
                                                     std::size_t max_hops,
                                                     std::uint64_t allowed = ~std::uint64_t{0}) {
    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> stack;
    std::vector<char> seen(g.node_count(), 0);
    auto dfs = [&](auto&& self, NodeId x) -> void {
        if (x == v) {
            out.push_back(stack);
            return;
        }
        if (stack.size() == max_hops) {
            return;
        }
        seen[x] = 1;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!((allowed >> e) & 1) || !g.edge(e).touches(x)) {
                continue;
            }
            NodeId y = g.edge(e).other(x);
            if (!seen[y]) {
                stack.push_back(e);
                self(self, y);
                stack.pop_back();
            }
        }
        seen[x] = 0;
    };
    dfs(dfs, u);
    return out;
}

// LBDC feasibility straight from the definition over simple paths
inline bool lbdc_feasible(const Graph& g, NodeId u, NodeId v, std::size_t t, std::size_t ell,
                          std::uint64_t faults, std::uint64_t allowed = ~std::uint64_t{0}) {
    for (const auto& path : simple_paths(g, u, v, t, allowed)) {
        std::size_t hit = 0;
        for (EdgeId e : path) {
            hit += (faults >> e) & 1;
        }
        if (hit == 0) {
            return false;
        }
        if (path.size() >= 2 && path.size() <= ell && hit < 2) {
            return false;
        }
    }
    return true;
}

inline std::size_t lbdc_optimum(const Graph& g, NodeId u, NodeId v, std::size_t t,
                                std::size_t ell, std::uint64_t allowed = ~std::uint64_t{0}) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.edge_count()); ++s) {
        if ((s & ~allowed) == 0 && static_cast<std::size_t>(std::popcount(s)) < best
            && lbdc_feasible(g, u, v, t, ell, s, allowed)) {
            best = std::popcount(s);
        }
    }
    return best;
}

}
