#ifndef EFT_GRAPH_HPP
#define EFT_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eft {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Extended nonnegative length; infinity marks an unreachable pair or an
/// unusable edge.
using Length = double;
inline constexpr Length kInfinity = std::numeric_limits<Length>::infinity();

/// Raised for malformed input: bad ids, invalid parameters, unparsable files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    NodeId a = 0;
    NodeId b = 0;
    double weight = 1.0;

    NodeId other(NodeId x) const { return x == a ? b : a; }
    bool touches(NodeId x) const { return x == a || x == b; }
};

/*
 * Simple weighted undirected graph. Edge ids are the dense indices
 * 0..m-1 of the edge list passed at construction and never change.
 * Instances are immutable.
 */
class Graph {
public:
    Graph() = default;

    // throws InputError on self-loops, parallel edges, out-of-range
    // endpoints, and weights that are not strictly positive and finite
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // incident edge ids of x, in ascending edge id order
    std::span<const EdgeId> incident(NodeId x) const { return adjacency_[x]; }
    std::size_t degree(NodeId x) const { return adjacency_[x].size(); }

    std::optional<EdgeId> find_edge(NodeId x, NodeId y) const;

    bool valid_node(NodeId x) const { return x < adjacency_.size(); }
    bool valid_edge(EdgeId e) const { return e < edges_.size(); }

    void require_node(NodeId x) const;
    void require_edge(EdgeId e) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
};

/// Sorted, duplicate-free set of edge ids.
class FaultSet {
public:
    FaultSet() = default;
    explicit FaultSet(std::vector<EdgeId> members);
    FaultSet(std::initializer_list<EdgeId> members)
        : FaultSet(std::vector<EdgeId>(members)) {}

    const std::vector<EdgeId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(EdgeId e) const;

    // per-edge membership flags over an ambient graph with m edges
    std::vector<char> mask(std::size_t edge_count) const;

    void require_within(const Graph& graph) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const FaultSet&, const FaultSet&) = default;

private:
    std::vector<EdgeId> members_;
};

/*
 * Processing order of the greedy builders: nondecreasing weight, equal
 * weights broken by ascending edge id.
 */
class EdgeOrdering {
public:
    EdgeOrdering() = default;
    explicit EdgeOrdering(const Graph& graph);

    const std::vector<EdgeId>& permutation() const { return permutation_; }
    std::size_t position(EdgeId e) const { return position_[e]; }

    // the latest of a set of edges
    EdgeId latest(std::span<const EdgeId> edges) const;

    bool precedes(EdgeId x, EdgeId y) const { return position_[x] < position_[y]; }

private:
    std::vector<EdgeId> permutation_;
    std::vector<std::size_t> position_;
};

/*
 * Reusable Dijkstra state. Edge weights come from an optional full-length
 * override (infinite entries are unusable edges), else from the graph.
 * Excluded edges are skipped.
 */
class ShortestPaths {
public:
    explicit ShortestPaths(const Graph& graph);

    // single-source run; stops early once `target` is settled or every
    // remaining label exceeds `cutoff`
    void run(NodeId source,
             std::span<const double> weights = {},
             std::span<const char> excluded = {},
             std::optional<NodeId> target = std::nullopt,
             Length cutoff = kInfinity);

    Length distance(NodeId x) const { return dist_[x]; }
    const std::vector<Length>& distances() const { return dist_; }

private:
    const Graph* graph_;
    std::vector<Length> dist_;
    std::vector<char> settled_;
};

/// Shortest s-t length avoiding `excluded`, using the override weights
/// when given (one entry per edge). Infinity iff disconnected.
Length dist(const Graph& graph, const FaultSet& excluded, NodeId s, NodeId t,
            std::span<const double> weight_override = {});

/// Unweighted hop distances from `source` over edges not flagged in
/// `excluded` and flagged in `allowed` (empty span: all allowed). Unreached
/// nodes hold SIZE_MAX.
std::vector<std::size_t> hop_distances(const Graph& graph, NodeId source,
                                       std::span<const char> allowed = {},
                                       std::span<const char> excluded = {});

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

/// Length of a shortest simple cycle in edges, or nullopt for forests.
std::optional<std::size_t> girth(const Graph& graph);

/// A simple cycle: nodes v_0..v_{L-1} and edges[i] = (v_i, v_{i+1 mod L}).
struct Cycle {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
};

/*
 * Calls `visit` once per simple cycle with at most `max_len` edges, up to
 * rotation and reflection. Only edges flagged in `allowed` are used (empty
 * span: all edges). `visit` returns false to stop the enumeration.
 * Cycles are reported with their smallest node first.
 */
void for_each_simple_cycle(const Graph& graph, std::size_t max_len,
                           const std::function<bool(const Cycle&)>& visit,
                           std::span<const char> allowed = {});

std::vector<Cycle> enumerate_simple_cycles(const Graph& graph, std::size_t max_len,
                                           std::span<const char> allowed = {});

/// Strict comparison shared by every stretch test: true iff `achieved`
/// is strictly larger than `bound` beyond floating-point noise.
bool exceeds(Length achieved, Length bound);

}

#endif /* EFT_GRAPH_HPP */
