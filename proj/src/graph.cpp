#include "eft/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace eft {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(node_count) {
    std::set<std::pair<NodeId, NodeId>> seen;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        if (edge.a >= node_count || edge.b >= node_count) {
            throw InputError("edge " + std::to_string(e) + " has an endpoint outside 0.."
                             + std::to_string(node_count) + "-1");
        }
        if (edge.a == edge.b) {
            throw InputError("edge " + std::to_string(e) + " is a self-loop");
        }
        if (!(edge.weight > 0.0) || !std::isfinite(edge.weight)) {
            throw InputError("edge " + std::to_string(e) + " has a weight that is not positive and finite");
        }
        auto key = std::minmax(edge.a, edge.b);
        if (!seen.insert(key).second) {
            throw InputError("edge " + std::to_string(e) + " duplicates an earlier edge between "
                             + std::to_string(key.first) + " and " + std::to_string(key.second));
        }
        adjacency_[edge.a].push_back(e);
        adjacency_[edge.b].push_back(e);
    }
}

std::optional<EdgeId> Graph::find_edge(NodeId x, NodeId y) const {
    if (!valid_node(x) || !valid_node(y)) {
        return std::nullopt;
    }
    if (degree(y) < degree(x)) {
        std::swap(x, y);
    }
    for (EdgeId e : adjacency_[x]) {
        if (edges_[e].other(x) == y) {
            return e;
        }
    }
    return std::nullopt;
}

void Graph::require_node(NodeId x) const {
    if (!valid_node(x)) {
        throw InputError("node id " + std::to_string(x) + " is out of range (n = "
                         + std::to_string(node_count()) + ")");
    }
}

void Graph::require_edge(EdgeId e) const {
    if (!valid_edge(e)) {
        throw InputError("edge id " + std::to_string(e) + " is out of range (m = "
                         + std::to_string(edge_count()) + ")");
    }
}

FaultSet::FaultSet(std::vector<EdgeId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool FaultSet::contains(EdgeId e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
}

std::vector<char> FaultSet::mask(std::size_t edge_count) const {
    std::vector<char> flags(edge_count, 0);
    for (EdgeId e : members_) {
        if (e < edge_count) {
            flags[e] = 1;
        }
    }
    return flags;
}

void FaultSet::require_within(const Graph& graph) const {
    for (EdgeId e : members_) {
        graph.require_edge(e);
    }
}

EdgeOrdering::EdgeOrdering(const Graph& graph)
    : permutation_(graph.edge_count()), position_(graph.edge_count()) {
    for (EdgeId e = 0; e < permutation_.size(); ++e) {
        permutation_[e] = e;
    }
    std::stable_sort(permutation_.begin(), permutation_.end(), [&](EdgeId x, EdgeId y) {
        return graph.edge(x).weight < graph.edge(y).weight;
    });
    for (std::size_t i = 0; i < permutation_.size(); ++i) {
        position_[permutation_[i]] = i;
    }
}

EdgeId EdgeOrdering::latest(std::span<const EdgeId> edges) const {
    if (edges.empty()) {
        throw InputError("latest edge of an empty edge set");
    }
    EdgeId best = edges.front();
    for (EdgeId e : edges) {
        if (position_[e] > position_[best]) {
            best = e;
        }
    }
    return best;
}

ShortestPaths::ShortestPaths(const Graph& graph)
    : graph_(&graph), dist_(graph.node_count(), kInfinity), settled_(graph.node_count(), 0) {}

void ShortestPaths::run(NodeId source, std::span<const double> weights,
                        std::span<const char> excluded, std::optional<NodeId> target,
                        Length cutoff) {
    graph_->require_node(source);
    std::fill(dist_.begin(), dist_.end(), kInfinity);
    std::fill(settled_.begin(), settled_.end(), 0);

    using Item = std::pair<Length, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist_[source] = 0.0;
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        auto [d, x] = queue.top();
        queue.pop();
        if (settled_[x]) {
            continue;
        }
        if (d > cutoff) {
            break;
        }
        settled_[x] = 1;
        if (target && *target == x) {
            break;
        }
        for (EdgeId e : graph_->incident(x)) {
            if (!excluded.empty() && excluded[e]) {
                continue;
            }
            const double w = weights.empty() ? graph_->edge(e).weight : weights[e];
            if (w == kInfinity) {
                continue;
            }
            NodeId y = graph_->edge(e).other(x);
            Length candidate = d + w;
            if (candidate < dist_[y]) {
                dist_[y] = candidate;
                queue.emplace(candidate, y);
            }
        }
    }
}

Length dist(const Graph& graph, const FaultSet& excluded, NodeId s, NodeId t,
            std::span<const double> weight_override) {
    graph.require_node(s);
    graph.require_node(t);
    excluded.require_within(graph);
    if (!weight_override.empty() && weight_override.size() != graph.edge_count()) {
        throw InputError("weight override must have one entry per edge");
    }
    if (s == t) {
        return 0.0;
    }
    ShortestPaths paths(graph);
    auto mask = excluded.mask(graph.edge_count());
    paths.run(s, weight_override, mask, t);
    return paths.distance(t);
}

std::vector<std::size_t> hop_distances(const Graph& graph, NodeId source,
                                       std::span<const char> allowed,
                                       std::span<const char> excluded) {
    graph.require_node(source);
    std::vector<std::size_t> hops(graph.node_count(), kUnreached);
    std::queue<NodeId> frontier;
    hops[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        NodeId x = frontier.front();
        frontier.pop();
        for (EdgeId e : graph.incident(x)) {
            if ((!allowed.empty() && !allowed[e]) || (!excluded.empty() && excluded[e])) {
                continue;
            }
            NodeId y = graph.edge(e).other(x);
            if (hops[y] == kUnreached) {
                hops[y] = hops[x] + 1;
                frontier.push(y);
            }
        }
    }
    return hops;
}

std::optional<std::size_t> girth(const Graph& graph) {
    // BFS from every root; a non-tree edge (x, y) closes a closed walk of
    // length hops[x] + hops[y] + 1, and the minimum over all roots is the girth
    std::optional<std::size_t> best;
    const std::size_t n = graph.node_count();
    std::vector<std::size_t> hops(n);
    std::vector<EdgeId> parent_edge(n);
    for (NodeId root = 0; root < n; ++root) {
        std::fill(hops.begin(), hops.end(), kUnreached);
        std::queue<NodeId> frontier;
        hops[root] = 0;
        parent_edge[root] = static_cast<EdgeId>(-1);
        frontier.push(root);
        while (!frontier.empty()) {
            NodeId x = frontier.front();
            frontier.pop();
            if (best && 2 * hops[x] >= *best) {
                break;
            }
            for (EdgeId e : graph.incident(x)) {
                if (e == parent_edge[x]) {
                    continue;
                }
                NodeId y = graph.edge(e).other(x);
                if (hops[y] == kUnreached) {
                    hops[y] = hops[x] + 1;
                    parent_edge[y] = e;
                    frontier.push(y);
                } else {
                    std::size_t length = hops[x] + hops[y] + 1;
                    if (!best || length < *best) {
                        best = length;
                    }
                }
            }
        }
    }
    return best;
}

namespace {

class CycleSearch {
public:
    CycleSearch(const Graph& graph, std::size_t max_len,
                const std::function<bool(const Cycle&)>& visit, std::span<const char> allowed)
        : graph_(graph), max_len_(max_len), visit_(visit), allowed_(allowed),
          on_path_(graph.node_count(), 0) {}

    void run() {
        for (NodeId start = 0; start < graph_.node_count() && !stopped_; ++start) {
            start_ = start;
            cycle_.nodes.assign(1, start);
            cycle_.edges.clear();
            on_path_[start] = 1;
            extend(start);
            on_path_[start] = 0;
        }
    }

private:
    bool usable(EdgeId e) const { return allowed_.empty() || allowed_[e]; }

    void extend(NodeId x) {
        for (EdgeId e : graph_.incident(x)) {
            if (stopped_ || !usable(e)) {
                continue;
            }
            NodeId y = graph_.edge(e).other(x);
            if (y == start_) {
                // close the cycle; the reflection is skipped by requiring
                // the second node to be smaller than the last
                if (cycle_.edges.size() + 1 >= 3 && cycle_.nodes[1] < cycle_.nodes.back()) {
                    cycle_.edges.push_back(e);
                    if (!visit_(cycle_)) {
                        stopped_ = true;
                    }
                    cycle_.edges.pop_back();
                }
                continue;
            }
            if (y < start_ || on_path_[y] || cycle_.edges.size() + 1 >= max_len_) {
                continue;
            }
            on_path_[y] = 1;
            cycle_.nodes.push_back(y);
            cycle_.edges.push_back(e);
            extend(y);
            cycle_.edges.pop_back();
            cycle_.nodes.pop_back();
            on_path_[y] = 0;
        }
    }

    const Graph& graph_;
    std::size_t max_len_;
    const std::function<bool(const Cycle&)>& visit_;
    std::span<const char> allowed_;
    std::vector<char> on_path_;
    NodeId start_ = 0;
    Cycle cycle_;
    bool stopped_ = false;
};

}

void for_each_simple_cycle(const Graph& graph, std::size_t max_len,
                           const std::function<bool(const Cycle&)>& visit,
                           std::span<const char> allowed) {
    if (max_len < 3) {
        throw InputError("cycle length bound must be at least 3");
    }
    CycleSearch search(graph, max_len, visit, allowed);
    search.run();
}

std::vector<Cycle> enumerate_simple_cycles(const Graph& graph, std::size_t max_len,
                                           std::span<const char> allowed) {
    std::vector<Cycle> cycles;
    for_each_simple_cycle(graph, max_len, [&](const Cycle& c) {
        cycles.push_back(c);
        return true;
    }, allowed);
    return cycles;
}

bool exceeds(Length achieved, Length bound) {
    if (achieved == kInfinity) {
        return bound != kInfinity;
    }
    if (bound == kInfinity) {
        return false;
    }
    return achieved > bound + 1e-9 * std::max(1.0, std::abs(bound));
}

}
