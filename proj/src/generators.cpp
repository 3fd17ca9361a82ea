#include "eft/generators.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace eft {

GraphKind parse_graph_kind(const std::string& name) {
    if (name == "gnp") return GraphKind::gnp;
    if (name == "random_regular" || name == "regular") return GraphKind::random_regular;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "path") return GraphKind::path;
    if (name == "complete") return GraphKind::complete;
    if (name == "incidence_bipartite" || name == "incidence") return GraphKind::incidence_bipartite;
    throw InputError("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) {
    switch (kind) {
    case GraphKind::gnp: return "gnp";
    case GraphKind::random_regular: return "random_regular";
    case GraphKind::cycle: return "cycle";
    case GraphKind::path: return "path";
    case GraphKind::complete: return "complete";
    case GraphKind::incidence_bipartite: return "incidence_bipartite";
    }
    return "unknown";
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw InputError("uniform_below: empty range");
    }
    // rejection sampling removes modulo bias
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph make_cycle(std::size_t n) {
    if (n < 3) {
        throw InputError("cycle needs at least 3 nodes");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n), 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph make_path(std::size_t n) {
    if (n < 1) {
        throw InputError("path needs at least 1 node");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(i + 1), 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph make_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            edges.push_back({i, j, 1.0});
        }
    }
    return Graph(n, std::move(edges));
}

Graph make_gnp(std::size_t n, double p, std::uint64_t seed, std::uint32_t max_weight) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("gnp probability must lie in [0, 1]");
    }
    if (max_weight < 1) {
        throw InputError("max weight must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (uniform_unit(rng) < p) {
                edges.push_back({i, j, 1.0});
            }
        }
    }
    if (max_weight > 1) {
        for (Edge& e : edges) {
            e.weight = static_cast<double>(1 + uniform_below(rng, max_weight));
        }
    }
    return Graph(n, std::move(edges));
}

Graph make_random_regular(std::size_t n, std::size_t degree, std::uint64_t seed) {
    if (degree > 0 && degree >= n) {
        throw InputError("regular degree must be smaller than the node count");
    }
    if ((n * degree) % 2 != 0) {
        throw InputError("regular graph needs n * degree even");
    }
    std::mt19937_64 rng(seed);
    constexpr int kMaxRestarts = 10000;
    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        // random pairing of degree-many points per node, rejecting loops and
        // repeated pairs; restart when no admissible pair is left
        std::vector<NodeId> points;
        for (NodeId x = 0; x < n; ++x) {
            for (std::size_t c = 0; c < degree; ++c) {
                points.push_back(x);
            }
        }
        std::set<std::pair<NodeId, NodeId>> chosen;
        std::vector<Edge> edges;
        bool stuck = false;
        while (!points.empty()) {
            auto admissible = [&](std::size_t i, std::size_t j) {
                NodeId x = points[i];
                NodeId y = points[j];
                return x != y && !chosen.count(std::minmax(x, y));
            };
            std::size_t i = 0;
            std::size_t j = 0;
            bool found = false;
            for (int tries = 0; tries < 64 && !found; ++tries) {
                i = uniform_below(rng, points.size());
                j = uniform_below(rng, points.size());
                found = i != j && admissible(i, j);
            }
            if (!found) {
                std::vector<std::pair<std::size_t, std::size_t>> options;
                for (std::size_t a = 0; a < points.size(); ++a) {
                    for (std::size_t b = a + 1; b < points.size(); ++b) {
                        if (admissible(a, b)) {
                            options.emplace_back(a, b);
                        }
                    }
                }
                if (options.empty()) {
                    stuck = true;
                    break;
                }
                std::tie(i, j) = options[uniform_below(rng, options.size())];
            }
            NodeId x = points[i];
            NodeId y = points[j];
            chosen.insert(std::minmax(x, y));
            edges.push_back({std::min(x, y), std::max(x, y), 1.0});
            if (i < j) {
                std::swap(i, j);
            }
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
        }
        if (!stuck) {
            std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
                return std::tie(l.a, l.b) < std::tie(r.a, r.b);
            });
            return Graph(n, std::move(edges));
        }
    }
    throw InputError("could not realise a random regular graph with the given parameters");
}

bool is_prime(std::size_t q) {
    if (q < 2) {
        return false;
    }
    for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            return false;
        }
    }
    return true;
}

Graph make_incidence_bipartite(std::size_t q) {
    if (!is_prime(q)) {
        throw InputError("incidence graph order q must be prime, got " + std::to_string(q));
    }
    // normalised homogeneous coordinates: first nonzero coordinate is 1
    std::vector<std::array<std::size_t, 3>> points;
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            points.push_back({1, a, b});
        }
    }
    for (std::size_t b = 0; b < q; ++b) {
        points.push_back({0, 1, b});
    }
    points.push_back({0, 0, 1});

    const std::size_t count = points.size();
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < count; ++p) {
        for (std::size_t l = 0; l < count; ++l) {
            const auto& x = points[p];
            const auto& y = points[l];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) {
                edges.push_back({static_cast<NodeId>(p), static_cast<NodeId>(count + l), 1.0});
            }
        }
    }
    return Graph(2 * count, std::move(edges));
}

Graph make_petersen() {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<NodeId>((i + 1) % 5), 1.0});
        edges.push_back({i, static_cast<NodeId>(i + 5), 1.0});
        edges.push_back({static_cast<NodeId>(i + 5), static_cast<NodeId>(5 + (i + 2) % 5), 1.0});
    }
    return Graph(10, std::move(edges));
}

Graph with_random_weights(const Graph& graph, std::uint32_t max_weight, std::uint64_t seed) {
    if (max_weight < 1) {
        throw InputError("max weight must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges = graph.edges();
    for (Edge& e : edges) {
        e.weight = static_cast<double>(1 + uniform_below(rng, max_weight));
    }
    return Graph(graph.node_count(), std::move(edges));
}

Graph generate(GraphKind kind, const GeneratorParams& params, std::uint64_t seed) {
    Graph graph;
    switch (kind) {
    case GraphKind::gnp:
        return make_gnp(params.n, params.p, seed, params.max_weight);
    case GraphKind::random_regular:
        graph = make_random_regular(params.n, params.degree, seed);
        break;
    case GraphKind::cycle:
        graph = make_cycle(params.n);
        break;
    case GraphKind::path:
        graph = make_path(params.n);
        break;
    case GraphKind::complete:
        graph = make_complete(params.n);
        break;
    case GraphKind::incidence_bipartite:
        graph = make_incidence_bipartite(params.q);
        break;
    }
    if (params.max_weight > 1) {
        // separate stream so the topology does not depend on the weights
        return with_random_weights(graph, params.max_weight, seed ^ 0x9e3779b97f4a7c15ULL);
    }
    return graph;
}

}
