#ifndef EFT_SCUM_HPP
#define EFT_SCUM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eft/blocking.hpp"
#include "eft/emulator.hpp"
#include "eft/graph.hpp"

namespace eft {

/// Simple k-edge path v_0..v_k with edges e_1..e_k; `middle` is the
/// 1-based index m = floor((k+1)/2) of the latest edge.
struct ScumPath {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    std::size_t middle = 0;
};

inline std::size_t middle_index(std::size_t k) { return (k + 1) / 2; }

/// Oriented path given by its node sequence. True iff no edge of the path
/// forms a block with an edge touching a node that comes strictly after
/// that edge. Throws InputError when consecutive nodes are not adjacent or
/// a node repeats.
bool is_chain_unblocked(const Graph& g, std::span<const NodeId> nodes, const BlockingSet& blocks);

struct ScumOptions {
    std::uint64_t budget_paths = 50'000'000;  // partial paths explored
    bool collect = false;                     // keep the paths, not just the count
};

struct ScumEnumeration {
    std::uint64_t count = 0;
    std::vector<ScumPath> paths;  // canonical orientation: v_0 < v_k; sorted
};

/*
 * SCUM k-paths of H: simple, both halves read outward from the middle edge
 * are chain unblocked, and the middle edge is the latest. Each undirected
 * path appears once, oriented from its smaller endpoint. Throws
 * BudgetExceeded.
 */
ScumEnumeration enumerate_scum(const Graph& g, const Emulator& h, const BlockingSet& blocks,
                               std::size_t k, const ScumOptions& options = {});

struct MeetCount {
    std::uint64_t meets = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into the path list
};

/// Unordered pairs of distinct paths with the same endpoint set.
MeetCount count_meets(const std::vector<ScumPath>& paths, bool collect_pairs = false);

/// Core edges: e survives iterated deletion of nodes of degree <= d/4 in
/// the subgraph of members up to and including e, d the average degree of H.
std::vector<EdgeId> core_edges(const Graph& g, const Emulator& h);

struct StructureReport {
    bool preconditions_met = false;
    std::string precondition_note;

    // hard assertions, only meaningful for k >= 3
    bool two_path_bound_holds = true;
    std::size_t max_two_paths = 0;
    std::optional<std::pair<NodeId, NodeId>> two_path_witness;
    bool meets_internally_disjoint = true;
    std::optional<std::pair<ScumPath, ScumPath>> meet_witness;

    // metrics
    std::uint64_t scum_k_paths = 0;
    std::uint64_t scum_3_paths = 0;
    std::uint64_t scum_3_meets = 0;
    std::size_t core_edge_count = 0;
    double average_degree = 0.0;
    double counting_ratio = 0.0;  // scum_k_paths / (n d^k)
    double meet_ratio = 0.0;      // scum_3_meets / (n d f^3)

    bool passed() const {
        return preconditions_met && two_path_bound_holds && meets_internally_disjoint;
    }
};

/*
 * Checks on (H, B) for a given k and per-edge block budget f.
 * Preconditions: B is a 2k double-blocking set of H, and every edge is
 * the later member of at most f blocks. When they fail nothing is
 * asserted. For k >= 3: every node pair has at most f+1 simple 2-paths,
 * and the two paths of every SCUM 3-path meet share only their endpoints.
 */
StructureReport check_structure_lemmas(const Graph& g, const Emulator& h, const BlockingSet& blocks,
                                       std::size_t k, std::size_t f,
                                       const ScumOptions& options = {});

/// Largest number of blocks in which an edge is the later member.
std::size_t max_later_participation(const Emulator& h, const BlockingSet& blocks);

}

#endif /* EFT_SCUM_HPP */
