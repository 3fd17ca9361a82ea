#ifndef EFT_BLOCKING_HPP
#define EFT_BLOCKING_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "eft/emulator.hpp"
#include "eft/graph.hpp"

namespace eft {

using Block = std::pair<EdgeId, EdgeId>;  // stored with first < second

/// Set of unordered pairs of distinct emulator edges.
class BlockingSet {
public:
    BlockingSet() = default;
    explicit BlockingSet(const std::vector<Block>& blocks);

    // false when the pair was already present
    bool insert(EdgeId x, EdgeId y);
    bool contains(EdgeId x, EdgeId y) const;

    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }
    const std::set<Block>& blocks() const { return blocks_; }

    std::span<const EdgeId> partners(EdgeId e) const;
    std::size_t participation(EdgeId e) const { return partners(e).size(); }
    std::size_t max_participation() const;

    void require_within(const Emulator& h) const;

    friend bool operator==(const BlockingSet& l, const BlockingSet& r) {
        return l.blocks_ == r.blocks_;
    }

private:
    std::set<Block> blocks_;
    std::map<EdgeId, std::vector<EdgeId>> partners_;  // sorted partner lists
};

/*
 * Blocks {e, x} for every member e and every x in its witness that is
 * itself a member processed before e. Witness edges outside H cannot lie
 * on an H-cycle; later members can never be a partner of the latest edge
 * of a cycle. Throws InputError when a member has no recorded witness.
 */
BlockingSet extract_blocking(const Emulator& h);

enum class BlockingFailure { unblocked_long, singly_blocked_short };

struct BlockingCounterexample {
    Cycle cycle;
    BlockingFailure failure = BlockingFailure::unblocked_long;
};

/// nullopt iff every cycle of H with <= 2k edges carries a block made of
/// its latest edge and another cycle edge, and every cycle with <= k+1
/// edges carries two such blocks.
std::optional<BlockingCounterexample> validate_double_blocking(const Graph& g, const Emulator& h,
                                                               const BlockingSet& blocks,
                                                               std::size_t k);

// blocks {latest(C), x} with x on C
std::size_t count_cycle_blocks(const Cycle& cycle, const BlockingSet& blocks,
                               const EdgeOrdering& ordering);

struct CleanResult {
    Graph graph;                       // edge ids follow the input processing order
    std::vector<NodeId> node_origin;   // cleaned node -> input node
    std::vector<EdgeId> edge_origin;   // cleaned edge -> input edge
    BlockingSet blocks;                // over cleaned edge ids
    double average_degree = 0.0;       // d fixed at the start of the degree phase
    std::size_t removed_for_blocks = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

/*
 * Normalisation of (H, B): first drop every edge in more than 2f blocks
 * together with its blocks; then, with d the average degree at that point,
 * repeatedly delete nodes of degree <= d/4 and split nodes of degree >= 2d
 * into two clones that take alternate incident edges. Runs until nothing
 * changes or `max_iterations` rounds have passed.
 */
CleanResult clean(const Graph& g, const Emulator& h, const BlockingSet& blocks, std::size_t f,
                  std::size_t max_iterations = 1000);

}

#endif /* EFT_BLOCKING_HPP */
