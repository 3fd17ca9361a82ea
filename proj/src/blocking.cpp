#include "eft/blocking.hpp"

#include <algorithm>

namespace eft {

BlockingSet::BlockingSet(const std::vector<Block>& blocks) {
    for (auto [x, y] : blocks) {
        insert(x, y);
    }
}

bool BlockingSet::insert(EdgeId x, EdgeId y) {
    if (x == y) {
        throw InputError("a block needs two distinct edges, got " + std::to_string(x) + " twice");
    }
    if (x > y) {
        std::swap(x, y);
    }
    if (!blocks_.emplace(x, y).second) {
        return false;
    }
    for (auto [e, partner] : {std::pair{x, y}, std::pair{y, x}}) {
        auto& list = partners_[e];
        list.insert(std::lower_bound(list.begin(), list.end(), partner), partner);
    }
    return true;
}

bool BlockingSet::contains(EdgeId x, EdgeId y) const {
    if (x > y) {
        std::swap(x, y);
    }
    return blocks_.count({x, y}) != 0;
}

std::span<const EdgeId> BlockingSet::partners(EdgeId e) const {
    auto it = partners_.find(e);
    if (it == partners_.end()) {
        return {};
    }
    return it->second;
}

std::size_t BlockingSet::max_participation() const {
    std::size_t best = 0;
    for (const auto& [e, list] : partners_) {
        best = std::max(best, list.size());
    }
    return best;
}

void BlockingSet::require_within(const Emulator& h) const {
    for (auto [x, y] : blocks_) {
        if (!h.contains(x) || !h.contains(y)) {
            throw InputError("block {" + std::to_string(x) + ", " + std::to_string(y)
                             + "} uses an edge outside the emulator");
        }
    }
}

BlockingSet extract_blocking(const Emulator& h) {
    BlockingSet blocks;
    for (EdgeId e : h.members()) {
        const FaultSet* witness = h.witness(e);
        if (!witness) {
            throw InputError("emulator edge " + std::to_string(e) + " has no recorded witness");
        }
        for (EdgeId x : *witness) {
            if (x != e && h.contains(x) && h.ordering().precedes(x, e)) {
                blocks.insert(e, x);
            }
        }
    }
    return blocks;
}

std::size_t count_cycle_blocks(const Cycle& cycle, const BlockingSet& blocks,
                               const EdgeOrdering& ordering) {
    const EdgeId last = ordering.latest(cycle.edges);
    std::size_t count = 0;
    for (EdgeId x : cycle.edges) {
        if (x != last && blocks.contains(last, x)) {
            ++count;
        }
    }
    return count;
}

std::optional<BlockingCounterexample> validate_double_blocking(const Graph& g, const Emulator& h,
                                                               const BlockingSet& blocks,
                                                               std::size_t k) {
    h.require_base(g);
    blocks.require_within(h);
    std::optional<BlockingCounterexample> failure;
    if (2 * k < 3) {
        return failure;
    }
    for_each_simple_cycle(g, 2 * k, [&](const Cycle& cycle) {
        const std::size_t count = count_cycle_blocks(cycle, blocks, h.ordering());
        if (count == 0) {
            failure = BlockingCounterexample{cycle, BlockingFailure::unblocked_long};
        } else if (cycle.edges.size() <= k + 1 && count < 2) {
            failure = BlockingCounterexample{cycle, BlockingFailure::singly_blocked_short};
        }
        return !failure;
    }, h.mask());
    return failure;
}

namespace {

// mutable multigraph-free working copy used by clean()
struct CleaningState {
    std::vector<std::pair<NodeId, NodeId>> ends;   // per input edge, current endpoints
    std::vector<char> alive_edge;
    std::vector<std::vector<EdgeId>> incident;     // per working node
    std::vector<NodeId> origin;                    // per working node
    std::vector<char> alive_node;
    std::map<EdgeId, std::set<EdgeId>> partners;

    std::size_t degree(NodeId x) const { return incident[x].size(); }

    void remove_edge(EdgeId e) {
        alive_edge[e] = 0;
        for (NodeId x : {ends[e].first, ends[e].second}) {
            auto& list = incident[x];
            list.erase(std::find(list.begin(), list.end(), e));
        }
        if (auto it = partners.find(e); it != partners.end()) {
            for (EdgeId other : it->second) {
                partners[other].erase(e);
            }
            partners.erase(it);
        }
    }

    void remove_node(NodeId x) {
        while (!incident[x].empty()) {
            remove_edge(incident[x].back());
        }
        alive_node[x] = 0;
    }

    void split(NodeId x) {
        const NodeId clone = static_cast<NodeId>(incident.size());
        incident.emplace_back();
        origin.push_back(origin[x]);
        alive_node.push_back(1);
        std::vector<EdgeId> keep;
        for (std::size_t i = 0; i < incident[x].size(); ++i) {
            EdgeId e = incident[x][i];
            if (i % 2 == 0) {
                keep.push_back(e);
            } else {
                incident[clone].push_back(e);
                auto& [a, b] = ends[e];
                (a == x ? a : b) = clone;
            }
        }
        incident[x] = std::move(keep);
    }
};

}

CleanResult clean(const Graph& g, const Emulator& h, const BlockingSet& blocks, std::size_t f,
                  std::size_t max_iterations) {
    h.require_base(g);
    blocks.require_within(h);

    CleaningState state;
    const std::size_t m = g.edge_count();
    state.ends.resize(m);
    state.alive_edge.assign(m, 0);
    state.incident.resize(g.node_count());
    state.origin.resize(g.node_count());
    state.alive_node.assign(g.node_count(), 1);
    for (NodeId x = 0; x < g.node_count(); ++x) {
        state.origin[x] = x;
    }
    for (EdgeId e = 0; e < m; ++e) {
        state.ends[e] = {g.edge(e).a, g.edge(e).b};
        if (h.contains(e)) {
            state.alive_edge[e] = 1;
            state.incident[g.edge(e).a].push_back(e);
            state.incident[g.edge(e).b].push_back(e);
        }
    }
    for (auto [x, y] : blocks.blocks()) {
        state.partners[x].insert(y);
        state.partners[y].insert(x);
    }

    CleanResult result;

    // phase 1: block participation
    for (bool changed = true; changed;) {
        changed = false;
        for (EdgeId e : h.members()) {
            if (state.alive_edge[e] && state.partners.count(e) && state.partners[e].size() > 2 * f) {
                state.remove_edge(e);
                ++result.removed_for_blocks;
                changed = true;
            }
        }
    }

    // phase 2: degrees, against d fixed here
    std::size_t edges_left = std::count(state.alive_edge.begin(), state.alive_edge.end(), 1);
    const double d = g.node_count() == 0 ? 0.0
                                         : 2.0 * static_cast<double>(edges_left)
                                               / static_cast<double>(g.node_count());
    result.average_degree = d;
    for (std::size_t round = 0; round < max_iterations; ++round) {
        bool changed = false;
        for (bool deleted = true; deleted;) {
            deleted = false;
            for (NodeId x = 0; x < state.incident.size(); ++x) {
                if (state.alive_node[x] && static_cast<double>(state.degree(x)) <= d / 4.0) {
                    state.remove_node(x);
                    deleted = changed = true;
                }
            }
        }
        for (NodeId x = 0; x < state.incident.size(); ++x) {
            if (state.alive_node[x] && state.degree(x) >= 2
                && static_cast<double>(state.degree(x)) >= 2.0 * d) {
                state.split(x);
                changed = true;
            }
        }
        result.iterations = round + 1;
        if (!changed) {
            result.converged = true;
            break;
        }
    }
    if (result.converged) {
        for (NodeId x = 0; x < state.incident.size(); ++x) {
            const double deg = static_cast<double>(state.degree(x));
            if (state.alive_node[x] && (deg <= d / 4.0 || deg >= 2.0 * d)) {
                result.converged = false;
            }
        }
    }

    // compact nodes and edges; edges keep their relative processing order
    std::vector<NodeId> renumber(state.incident.size(), 0);
    for (NodeId x = 0; x < state.incident.size(); ++x) {
        if (state.alive_node[x]) {
            renumber[x] = static_cast<NodeId>(result.node_origin.size());
            result.node_origin.push_back(state.origin[x]);
        }
    }
    std::vector<EdgeId> new_id(m, 0);
    std::vector<Edge> edges;
    for (EdgeId e : h.members()) {
        if (!state.alive_edge[e]) {
            continue;
        }
        new_id[e] = static_cast<EdgeId>(edges.size());
        result.edge_origin.push_back(e);
        edges.push_back({renumber[state.ends[e].first], renumber[state.ends[e].second],
                         g.edge(e).weight});
    }
    result.graph = Graph(result.node_origin.size(), std::move(edges));
    for (auto [x, y] : blocks.blocks()) {
        if (state.alive_edge[x] && state.alive_edge[y]) {
            result.blocks.insert(new_id[x], new_id[y]);
        }
    }
    return result;
}

}
