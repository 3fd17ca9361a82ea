#ifndef EFT_LBDC_HPP
#define EFT_LBDC_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "eft/graph.hpp"

namespace eft {

/*
 * Length-bounded double cut instance. The graph is read as unweighted and
 * may be restricted to a subset of its edges (empty mask: all edges).
 * Feasible cuts F hit every u-v path of at most t edges once and every
 * u-v path of 2..ell edges twice.
 */
class LbdcInstance {
public:
    LbdcInstance(const Graph& graph, NodeId u, NodeId v, std::size_t t, std::size_t ell,
                 std::vector<char> allowed = {});

    const Graph& graph() const { return *graph_; }
    NodeId u() const { return u_; }
    NodeId v() const { return v_; }
    std::size_t t() const { return t_; }
    std::size_t ell() const { return ell_; }

    bool has_edge(EdgeId e) const { return allowed_.empty() || allowed_[e]; }
    std::span<const char> allowed() const { return allowed_; }
    std::vector<EdgeId> edge_ids() const;

private:
    const Graph* graph_;
    NodeId u_;
    NodeId v_;
    std::size_t t_;
    std::size_t ell_;
    std::vector<char> allowed_;
};

enum class LbdcCondition { long_paths, short_paths };

struct LbdcTest {
    bool feasible = true;
    LbdcCondition violated = LbdcCondition::long_paths;
    // the violating walk from u to v; short-path witnesses may revisit nodes
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
};

/// Tester: a hop search in G \ F for the long condition, then for each
/// e = (x, y) in F the concatenations u~x, e, y~v and u~y, e, x~v of
/// shortest hop paths in G \ F. Ties go to the lexicographically smallest
/// node sequence.
LbdcTest test_feasible(const LbdcInstance& inst, const FaultSet& faults);

struct LbdcApproximation {
    FaultSet faults;
    std::size_t iterations = 0;
    bool stopped_early = false;  // size exceeded `stop_above` before becoming feasible
};

/// Adds every edge of each violating walk until the tester accepts. When
/// `stop_above` is given, gives up once |F| exceeds it.
LbdcApproximation approximate(const LbdcInstance& inst,
                              std::optional<std::size_t> stop_above = std::nullopt);

struct LbdcOracleBudget {
    std::uint64_t family_size = 0;
};

/// Minimum-cardinality feasible cut of size <= size_cap, ties broken by
/// the lexicographically smallest sorted id sequence; nullopt when none
/// exists within the cap.
std::variant<std::optional<FaultSet>, LbdcOracleBudget>
brute_optimal(const LbdcInstance& inst, std::size_t size_cap,
              std::uint64_t budget = 50'000'000);

}

#endif /* EFT_LBDC_HPP */
