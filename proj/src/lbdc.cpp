#include "eft/lbdc.hpp"

#include "eft/emulator.hpp"

namespace eft {

LbdcInstance::LbdcInstance(const Graph& graph, NodeId u, NodeId v, std::size_t t, std::size_t ell,
                           std::vector<char> allowed)
    : graph_(&graph), u_(u), v_(v), t_(t), ell_(ell), allowed_(std::move(allowed)) {
    graph.require_node(u);
    graph.require_node(v);
    if (u == v) {
        throw InputError("LBDC endpoints must differ");
    }
    if (ell < 1 || t <= ell) {
        throw InputError("LBDC needs integers t > ell >= 1, got t = " + std::to_string(t)
                         + ", ell = " + std::to_string(ell));
    }
    if (!allowed_.empty() && allowed_.size() != graph.edge_count()) {
        throw InputError("LBDC edge mask must have one entry per edge");
    }
}

std::vector<EdgeId> LbdcInstance::edge_ids() const {
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < graph_->edge_count(); ++e) {
        if (has_edge(e)) {
            ids.push_back(e);
        }
    }
    return ids;
}

namespace {

// lexicographically smallest shortest hop path from `from` to the node
// whose hop distances are `to_target`
void append_path(const LbdcInstance& inst, std::span<const char> excluded,
                 const std::vector<std::size_t>& to_target, NodeId from,
                 std::vector<NodeId>& nodes, std::vector<EdgeId>& edges) {
    const Graph& g = inst.graph();
    NodeId cur = from;
    if (nodes.empty() || nodes.back() != cur) {
        nodes.push_back(cur);
    }
    while (to_target[cur] != 0) {
        std::optional<NodeId> best_node;
        EdgeId best_edge = 0;
        for (EdgeId e : g.incident(cur)) {
            if (!inst.has_edge(e) || excluded[e]) {
                continue;
            }
            NodeId w = g.edge(e).other(cur);
            if (to_target[w] + 1 == to_target[cur] && (!best_node || w < *best_node)) {
                best_node = w;
                best_edge = e;
            }
        }
        cur = *best_node;
        nodes.push_back(cur);
        edges.push_back(best_edge);
    }
}

}

LbdcTest test_feasible(const LbdcInstance& inst, const FaultSet& faults) {
    const Graph& g = inst.graph();
    faults.require_within(g);
    const std::vector<char> excluded = faults.mask(g.edge_count());
    LbdcTest result;

    const auto from_v = hop_distances(g, inst.v(), inst.allowed(), excluded);
    if (from_v[inst.u()] <= inst.t()) {
        result.feasible = false;
        result.violated = LbdcCondition::long_paths;
        append_path(inst, excluded, from_v, inst.u(), result.nodes, result.edges);
        return result;
    }

    const auto from_u = hop_distances(g, inst.u(), inst.allowed(), excluded);
    for (EdgeId e : faults) {
        if (!inst.has_edge(e)) {
            continue;
        }
        const Edge& edge = g.edge(e);
        for (auto [x, y] : {std::pair{edge.a, edge.b}, std::pair{edge.b, edge.a}}) {
            if (from_u[x] == kUnreached || from_v[y] == kUnreached) {
                continue;
            }
            const std::size_t hops = from_u[x] + 1 + from_v[y];
            // a single edge is not a short path
            if (hops < 2 || hops > inst.ell()) {
                continue;
            }
            result.feasible = false;
            result.violated = LbdcCondition::short_paths;
            const auto to_x = hop_distances(g, x, inst.allowed(), excluded);
            append_path(inst, excluded, to_x, inst.u(), result.nodes, result.edges);
            result.edges.push_back(e);
            result.nodes.push_back(y);
            append_path(inst, excluded, from_v, y, result.nodes, result.edges);
            return result;
        }
    }
    return result;
}

LbdcApproximation approximate(const LbdcInstance& inst, std::optional<std::size_t> stop_above) {
    LbdcApproximation result;
    std::vector<EdgeId> members;
    for (;;) {
        LbdcTest test = test_feasible(inst, result.faults);
        if (test.feasible) {
            return result;
        }
        ++result.iterations;
        members = result.faults.members();
        members.insert(members.end(), test.edges.begin(), test.edges.end());
        result.faults = FaultSet(members);
        if (stop_above && result.faults.size() > *stop_above) {
            result.stopped_early = true;
            return result;
        }
    }
}

std::variant<std::optional<FaultSet>, LbdcOracleBudget>
brute_optimal(const LbdcInstance& inst, std::size_t size_cap, std::uint64_t budget) {
    const std::vector<EdgeId> ids = inst.edge_ids();
    const std::size_t cap = std::min(size_cap, ids.size());
    std::uint64_t family = 0;
    for (std::size_t s = 0; s <= cap; ++s) {
        std::uint64_t count = binomial(ids.size(), s);
        family = count > budget ? budget + 1 : family + count;
        if (family > budget) {
            return LbdcOracleBudget{family};
        }
    }
    for (std::size_t s = 0; s <= cap; ++s) {
        std::vector<EdgeId> combo(s);
        for (std::size_t i = 0; i < s; ++i) {
            combo[i] = static_cast<EdgeId>(i);
        }
        do {
            std::vector<EdgeId> members(s);
            for (std::size_t i = 0; i < s; ++i) {
                members[i] = ids[combo[i]];
            }
            FaultSet candidate(std::move(members));
            if (test_feasible(inst, candidate).feasible) {
                return std::optional<FaultSet>(std::move(candidate));
            }
        } while (next_combination(combo, ids.size()));
    }
    return std::optional<FaultSet>();
}

}
