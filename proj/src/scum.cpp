#include "eft/scum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace eft {

bool is_chain_unblocked(const Graph& g, std::span<const NodeId> nodes, const BlockingSet& blocks) {
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        g.require_node(nodes[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (nodes[j] == nodes[i]) {
                throw InputError("path repeats node " + std::to_string(nodes[i]));
            }
        }
        if (i > 0) {
            auto e = g.find_edge(nodes[i - 1], nodes[i]);
            if (!e) {
                throw InputError("nodes " + std::to_string(nodes[i - 1]) + " and "
                                 + std::to_string(nodes[i]) + " are not adjacent");
            }
            edges.push_back(*e);
        }
    }
    // edge i joins nodes[i] and nodes[i+1]; nodes from i+2 on strictly follow it
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (EdgeId partner : blocks.partners(edges[i])) {
            const Edge& p = g.edge(partner);
            for (std::size_t j = i + 2; j < nodes.size(); ++j) {
                if (p.touches(nodes[j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

class ScumSearch {
public:
    ScumSearch(const Graph& g, const Emulator& h, const BlockingSet& blocks, std::size_t k,
               const ScumOptions& options, ScumEnumeration& out)
        : g_(g), h_(h), blocks_(blocks), k_(k), m_(middle_index(k)), options_(options), out_(out),
          on_path_(g.node_count(), 0), back_forbidden_(g.node_count(), 0),
          front_forbidden_(g.node_count(), 0) {}

    void run() {
        for (EdgeId mid : h_.members()) {
            const Edge& edge = g_.edge(mid);
            for (auto [x, y] : {std::pair{edge.a, edge.b}, std::pair{edge.b, edge.a}}) {
                mid_ = mid;
                back_nodes_.assign(1, x);   // v_{m-1}, v_{m-2}, ...
                back_edges_.clear();
                front_nodes_.assign(1, y);  // v_m, v_{m+1}, ...
                front_edges_.clear();
                on_path_[x] = on_path_[y] = 1;
                mark(back_forbidden_, mid, +1);
                mark(front_forbidden_, mid, +1);
                extend_back();
                mark(back_forbidden_, mid, -1);
                mark(front_forbidden_, mid, -1);
                on_path_[x] = on_path_[y] = 0;
            }
        }
    }

private:
    void mark(std::vector<int>& forbidden, EdgeId e, int delta) {
        for (EdgeId partner : blocks_.partners(e)) {
            forbidden[g_.edge(partner).a] += delta;
            forbidden[g_.edge(partner).b] += delta;
        }
    }

    void tick() {
        if (++explored_ > options_.budget_paths) {
            throw BudgetExceeded("SCUM enumeration passed its budget of "
                                 + std::to_string(options_.budget_paths) + " partial paths");
        }
    }

    // admissible next edge for either half: an earlier member leading to a
    // fresh node that no block of the half so far points at
    template <class Visit>
    void for_each_step(NodeId from, const std::vector<int>& forbidden, Visit&& visit) {
        for (EdgeId e : g_.incident(from)) {
            if (!h_.contains(e) || !h_.ordering().precedes(e, mid_)) {
                continue;
            }
            NodeId w = g_.edge(e).other(from);
            if (on_path_[w] || forbidden[w] != 0) {
                continue;
            }
            tick();
            visit(e, w);
        }
    }

    void extend_back() {
        if (back_edges_.size() + 1 == m_) {
            extend_front();
            return;
        }
        for_each_step(back_nodes_.back(), back_forbidden_, [&](EdgeId e, NodeId w) {
            on_path_[w] = 1;
            back_nodes_.push_back(w);
            back_edges_.push_back(e);
            mark(back_forbidden_, e, +1);
            extend_back();
            mark(back_forbidden_, e, -1);
            back_edges_.pop_back();
            back_nodes_.pop_back();
            on_path_[w] = 0;
        });
    }

    void extend_front() {
        if (back_edges_.size() + 1 + front_edges_.size() == k_) {
            emit();
            return;
        }
        for_each_step(front_nodes_.back(), front_forbidden_, [&](EdgeId e, NodeId w) {
            on_path_[w] = 1;
            front_nodes_.push_back(w);
            front_edges_.push_back(e);
            mark(front_forbidden_, e, +1);
            extend_front();
            mark(front_forbidden_, e, -1);
            front_edges_.pop_back();
            front_nodes_.pop_back();
            on_path_[w] = 0;
        });
    }

    void emit() {
        const NodeId first = back_nodes_.back();
        const NodeId last = front_nodes_.back();
        if (first > last) {
            return;
        }
        ++out_.count;
        if (!options_.collect) {
            return;
        }
        ScumPath path;
        path.middle = m_;
        path.nodes.assign(back_nodes_.rbegin(), back_nodes_.rend());
        path.nodes.insert(path.nodes.end(), front_nodes_.begin(), front_nodes_.end());
        path.edges.assign(back_edges_.rbegin(), back_edges_.rend());
        path.edges.push_back(mid_);
        path.edges.insert(path.edges.end(), front_edges_.begin(), front_edges_.end());
        out_.paths.push_back(std::move(path));
    }

    const Graph& g_;
    const Emulator& h_;
    const BlockingSet& blocks_;
    std::size_t k_;
    std::size_t m_;
    const ScumOptions& options_;
    ScumEnumeration& out_;
    std::vector<char> on_path_;
    std::vector<int> back_forbidden_;
    std::vector<int> front_forbidden_;
    EdgeId mid_ = 0;
    std::vector<NodeId> back_nodes_;
    std::vector<EdgeId> back_edges_;
    std::vector<NodeId> front_nodes_;
    std::vector<EdgeId> front_edges_;
    std::uint64_t explored_ = 0;
};

}

ScumEnumeration enumerate_scum(const Graph& g, const Emulator& h, const BlockingSet& blocks,
                               std::size_t k, const ScumOptions& options) {
    if (k < 1) {
        throw InputError("SCUM paths need k >= 1");
    }
    h.require_base(g);
    blocks.require_within(h);
    ScumEnumeration out;
    ScumSearch(g, h, blocks, k, options, out).run();
    std::sort(out.paths.begin(), out.paths.end(), [](const ScumPath& l, const ScumPath& r) {
        return l.nodes < r.nodes;
    });
    return out;
}

MeetCount count_meets(const std::vector<ScumPath>& paths, bool collect_pairs) {
    std::map<std::pair<NodeId, NodeId>, std::vector<std::size_t>> by_ends;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& nodes = paths[i].nodes;
        auto ends = std::minmax(nodes.front(), nodes.back());
        by_ends[{ends.first, ends.second}].push_back(i);
    }
    MeetCount result;
    for (const auto& [ends, group] : by_ends) {
        const std::uint64_t p = group.size();
        result.meets += p * (p - 1) / 2;
        if (collect_pairs) {
            for (std::size_t a = 0; a < group.size(); ++a) {
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    result.pairs.emplace_back(group[a], group[b]);
                }
            }
        }
    }
    return result;
}

std::vector<EdgeId> core_edges(const Graph& g, const Emulator& h) {
    h.require_base(g);
    std::vector<EdgeId> core;
    const auto& members = h.members();
    if (members.empty() || g.node_count() == 0) {
        return core;
    }
    const double threshold = 2.0 * static_cast<double>(members.size())
                             / static_cast<double>(g.node_count()) / 4.0;
    std::vector<std::size_t> degree(g.node_count());
    std::vector<char> alive_edge(g.edge_count());
    std::vector<char> alive_node(g.node_count());
    for (std::size_t i = 0; i < members.size(); ++i) {
        std::fill(degree.begin(), degree.end(), 0);
        std::fill(alive_edge.begin(), alive_edge.end(), 0);
        std::fill(alive_node.begin(), alive_node.end(), 1);
        for (std::size_t j = 0; j <= i; ++j) {
            alive_edge[members[j]] = 1;
            ++degree[g.edge(members[j]).a];
            ++degree[g.edge(members[j]).b];
        }
        std::vector<NodeId> queue;
        for (NodeId x = 0; x < g.node_count(); ++x) {
            if (static_cast<double>(degree[x]) <= threshold) {
                queue.push_back(x);
                alive_node[x] = 0;
            }
        }
        while (!queue.empty()) {
            NodeId x = queue.back();
            queue.pop_back();
            for (EdgeId e : g.incident(x)) {
                if (!alive_edge[e]) {
                    continue;
                }
                alive_edge[e] = 0;
                NodeId y = g.edge(e).other(x);
                --degree[y];
                if (alive_node[y] && static_cast<double>(degree[y]) <= threshold) {
                    alive_node[y] = 0;
                    queue.push_back(y);
                }
            }
        }
        if (alive_edge[members[i]]) {
            core.push_back(members[i]);
        }
    }
    return core;
}

std::size_t max_later_participation(const Emulator& h, const BlockingSet& blocks) {
    std::unordered_map<EdgeId, std::size_t> count;
    std::size_t best = 0;
    for (auto [x, y] : blocks.blocks()) {
        EdgeId later = h.ordering().precedes(x, y) ? y : x;
        best = std::max(best, ++count[later]);
    }
    return best;
}

StructureReport check_structure_lemmas(const Graph& g, const Emulator& h, const BlockingSet& blocks,
                                       std::size_t k, std::size_t f, const ScumOptions& options) {
    h.require_base(g);
    StructureReport report;
    if (auto bad = validate_double_blocking(g, h, blocks, k)) {
        report.precondition_note = "blocking set is not a valid double-blocking set for k = "
                                   + std::to_string(k);
        return report;
    }
    if (std::size_t later = max_later_participation(h, blocks); later > f) {
        report.precondition_note = "an edge is the later member of " + std::to_string(later)
                                   + " blocks, above f = " + std::to_string(f);
        return report;
    }
    report.preconditions_met = true;

    const double n = static_cast<double>(g.node_count());
    report.average_degree = n > 0 ? 2.0 * static_cast<double>(h.size()) / n : 0.0;
    report.core_edge_count = core_edges(g, h).size();

    if (k >= 3) {
        // 2-paths s - w - t counted through their middle node
        std::map<std::pair<NodeId, NodeId>, std::size_t> two_paths;
        for (NodeId w = 0; w < g.node_count(); ++w) {
            std::vector<NodeId> around;
            for (EdgeId e : g.incident(w)) {
                if (h.contains(e)) {
                    around.push_back(g.edge(e).other(w));
                }
            }
            std::sort(around.begin(), around.end());
            for (std::size_t a = 0; a < around.size(); ++a) {
                for (std::size_t b = a + 1; b < around.size(); ++b) {
                    std::size_t c = ++two_paths[{around[a], around[b]}];
                    if (c > report.max_two_paths) {
                        report.max_two_paths = c;
                        if (c > f + 1 && report.two_path_bound_holds) {
                            report.two_path_bound_holds = false;
                            report.two_path_witness = std::pair{around[a], around[b]};
                        }
                    }
                }
            }
        }

        ScumOptions collect = options;
        collect.collect = true;
        ScumEnumeration three = enumerate_scum(g, h, blocks, 3, collect);
        report.scum_3_paths = three.count;
        MeetCount meets = count_meets(three.paths, true);
        report.scum_3_meets = meets.meets;
        for (auto [i, j] : meets.pairs) {
            const auto& l = three.paths[i].nodes;
            const auto& r = three.paths[j].nodes;
            bool shared = false;
            for (std::size_t a = 1; a + 1 < l.size(); ++a) {
                for (std::size_t b = 1; b + 1 < r.size(); ++b) {
                    shared = shared || l[a] == r[b];
                }
            }
            if (shared) {
                report.meets_internally_disjoint = false;
                report.meet_witness = std::pair{three.paths[i], three.paths[j]};
                break;
            }
        }
        report.scum_k_paths = k == 3 ? three.count : enumerate_scum(g, h, blocks, k, options).count;
    } else {
        report.scum_k_paths = enumerate_scum(g, h, blocks, k, options).count;
    }

    const double d = report.average_degree;
    const double paths_scale = n * std::pow(d, static_cast<double>(k));
    report.counting_ratio = paths_scale > 0 ? static_cast<double>(report.scum_k_paths) / paths_scale
                                            : std::nan("");
    const double meet_scale = n * d * std::pow(static_cast<double>(f), 3.0);
    report.meet_ratio = meet_scale > 0 ? static_cast<double>(report.scum_3_meets) / meet_scale
                                       : std::nan("");
    return report;
}

}
