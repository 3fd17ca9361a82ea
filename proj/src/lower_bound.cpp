#include "eft/lower_bound.hpp"

#include "eft/generators.hpp"

namespace eft {

FaultSet isolation_fault_set(const Graph& graph, EdgeId e) {
    graph.require_edge(e);
    const Edge& edge = graph.edge(e);
    std::vector<EdgeId> members;
    for (NodeId x : {edge.a, edge.b}) {
        for (EdgeId other : graph.incident(x)) {
            if (other != e) {
                members.push_back(other);
            }
        }
    }
    return FaultSet(std::move(members));
}

Graph dense_lb_instance(std::size_t n, std::size_t f, std::uint64_t seed) {
    if (f % 2 != 0) {
        throw InputError("dense lower-bound instance needs an even fault budget f");
    }
    if (f / 2 >= n) {
        throw InputError("dense lower-bound instance needs f/2 < n");
    }
    return make_random_regular(n, f / 2, seed);
}

CloudGraph blow_up(const Graph& base, std::size_t clones) {
    if (clones == 0) {
        throw InputError("cloud size must be positive");
    }
    CloudGraph lb;
    lb.clones = clones;
    const std::size_t n = base.node_count() * clones;
    lb.base_of.resize(n);
    lb.clone_of.resize(n);
    for (NodeId x = 0; x < base.node_count(); ++x) {
        for (std::uint32_t c = 0; c < clones; ++c) {
            lb.base_of[x * clones + c] = x;
            lb.clone_of[x * clones + c] = c;
        }
    }
    std::vector<Edge> edges;
    for (EdgeId be = 0; be < base.edge_count(); ++be) {
        const Edge& b = base.edge(be);
        for (std::uint32_t i = 0; i < clones; ++i) {
            for (std::uint32_t j = 0; j < clones; ++j) {
                edges.push_back({lb.node(b.a, i), lb.node(b.b, j), 1.0});
                lb.bundle_of.push_back(be);
            }
        }
    }
    lb.graph = Graph(n, std::move(edges));
    lb.base = base;
    return lb;
}

CloudGraph k2_lb_graph(std::size_t q, std::size_t f) {
    return blow_up(make_incidence_bipartite(q), f);
}

AdversarialFaults k2_adversarial_faults(const CloudGraph& lb, const Emulator& h, EdgeId e) {
    const Graph& g = lb.graph;
    g.require_edge(e);
    h.require_base(g);
    const NodeId u = g.edge(e).a;
    const NodeId v = g.edge(e).b;
    if (lb.same_cloud(u, v) || !lb.base.find_edge(lb.base_of[u], lb.base_of[v])) {
        throw InputError("edge endpoints are not in adjacent clouds");
    }

    AdversarialFaults attack;
    std::vector<EdgeId> all;
    // (u, x) for x in C_v, and (v, y) for y in C_u
    for (auto [from, cloud_of] : {std::pair{u, v}, std::pair{v, u}}) {
        for (EdgeId other : g.incident(from)) {
            if (other != e && lb.same_cloud(g.edge(other).other(from), cloud_of)) {
                attack.cross.push_back(other);
            }
        }
    }

    // H-edges (p, x) across clouds closing a G 2-path (p, q, x) fault (q, x)
    auto zone = [&](NodeId p, NodeId q, std::vector<EdgeId>& out) {
        for (EdgeId he : g.incident(p)) {
            if (!h.contains(he)) {
                continue;
            }
            NodeId x = g.edge(he).other(p);
            if (x == q || lb.same_cloud(p, x)) {
                continue;
            }
            if (auto qx = g.find_edge(q, x)) {
                out.push_back(*qx);
            }
        }
    };
    zone(u, v, attack.z_u);
    zone(v, u, attack.z_v);

    all.insert(all.end(), attack.cross.begin(), attack.cross.end());
    all.insert(all.end(), attack.z_u.begin(), attack.z_u.end());
    all.insert(all.end(), attack.z_v.begin(), attack.z_v.end());
    attack.all = FaultSet(std::move(all));
    return attack;
}

}
