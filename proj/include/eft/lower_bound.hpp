#ifndef EFT_LOWER_BOUND_HPP
#define EFT_LOWER_BOUND_HPP

#include <cstdint>
#include <vector>

#include "eft/emulator.hpp"
#include "eft/graph.hpp"

namespace eft {

/// Every edge touching u or v except e = (u, v) itself.
FaultSet isolation_fault_set(const Graph& graph, EdgeId e);

/// Random (f/2)-regular graph on n nodes; f must be even.
Graph dense_lb_instance(std::size_t n, std::size_t f, std::uint64_t seed);

/*
 * Cloud blow-up of a bipartite base graph: base node x becomes clones
 * x*f .. x*f + f-1, and each base edge becomes the complete f x f bundle
 * between the two clouds.
 */
struct CloudGraph {
    Graph base;
    Graph graph;
    std::size_t clones = 0;
    std::vector<NodeId> base_of;      // per node of `graph`
    std::vector<std::uint32_t> clone_of;
    std::vector<EdgeId> bundle_of;    // per edge of `graph`: its base edge

    bool same_cloud(NodeId x, NodeId y) const { return base_of[x] == base_of[y]; }
    NodeId node(NodeId base_node, std::uint32_t clone) const {
        return static_cast<NodeId>(base_node * clones + clone);
    }
};

CloudGraph blow_up(const Graph& base, std::size_t clones);

/// Blow-up of the PG(2, q) incidence graph with f clones per node.
CloudGraph k2_lb_graph(std::size_t q, std::size_t f);

struct AdversarialFaults {
    std::vector<EdgeId> cross;  // u to C_v and v to C_u, except (u, v)
    std::vector<EdgeId> z_u;    // (v, x) for H-edges (u, x) closing a G 2-path (u, v, x)
    std::vector<EdgeId> z_v;    // (t, u) for H-edges (t, v) closing a G 2-path (t, u, v)
    FaultSet all;
};

/// Fault set attacking the bundle edge e = (u, v). Throws InputError when
/// e's endpoints are not in adjacent clouds.
AdversarialFaults k2_adversarial_faults(const CloudGraph& lb, const Emulator& h, EdgeId e);

}

#endif /* EFT_LOWER_BOUND_HPP */
