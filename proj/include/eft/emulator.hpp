#ifndef EFT_EMULATOR_HPP
#define EFT_EMULATOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eft/graph.hpp"

namespace eft {

/*
 * An emulator candidate H: a subset of the edges of a base graph G, kept
 * in the base graph's processing order, plus the fault set that justified
 * each insertion when H came out of a greedy builder.
 */
class Emulator {
public:
    Emulator() = default;
    explicit Emulator(const Graph& base);
    Emulator(const Graph& base, std::vector<EdgeId> members,
             std::map<EdgeId, FaultSet> witnesses = {});

    static Emulator complete(const Graph& base);

    // append an edge that is later in the ordering than every member
    void add(EdgeId e, std::optional<FaultSet> witness = std::nullopt);

    const std::vector<EdgeId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(EdgeId e) const { return e < mask_.size() && mask_[e]; }
    std::span<const char> mask() const { return mask_; }

    const FaultSet* witness(EdgeId e) const;
    const std::map<EdgeId, FaultSet>& witnesses() const { return witnesses_; }
    std::size_t max_witness_size() const;

    const EdgeOrdering& ordering() const { return ordering_; }
    std::size_t base_edge_count() const { return mask_.size(); }
    std::size_t base_node_count() const { return base_nodes_; }

    void require_base(const Graph& graph) const;

private:
    std::vector<EdgeId> members_;
    std::vector<char> mask_;
    std::map<EdgeId, FaultSet> witnesses_;
    EdgeOrdering ordering_;
    std::size_t base_nodes_ = 0;
};

/// H^F: every member edge weighted by its endpoints' distance in G \ F.
/// Non-members carry infinite weight.
struct ReweightedView {
    FaultSet faults;
    std::vector<Length> weights;

    Length weight(EdgeId e) const { return weights[e]; }
};

/*
 * Shared precomputation for repeated reweighting of one base graph. A
 * member edge outside F whose weight already equals its endpoints'
 * distance in G keeps that weight in every G \ F; only faulted or
 * non-shortest members need a search.
 */
class Reweighter {
public:
    explicit Reweighter(const Graph& graph);

    const Graph& graph() const { return *graph_; }

    void reweight(const Emulator& h, std::span<const char> fault_mask,
                  std::vector<Length>& weights);

    // shortest s-t length over the weights produced by reweight()
    Length emulator_distance(std::span<const Length> weights, NodeId s, NodeId t,
                             Length cutoff = kInfinity);

    bool tight(EdgeId e) const { return tight_[e]; }

private:
    const Graph* graph_;
    std::vector<char> tight_;
    ShortestPaths search_;
    std::vector<NodeId> pending_;
};

ReweightedView reweight(const Graph& g, const Emulator& h, const FaultSet& faults);

struct Violation {
    NodeId s = 0;
    NodeId t = 0;
    std::optional<EdgeId> edge;  // absent for all-pairs audits of non-adjacent pairs
    Length achieved = 0.0;
    Length bound = 0.0;
};

enum class StretchScope {
    surviving_edges,  // edges of G \ F only, sufficient for the guarantee
    all_pairs,        // every node pair, for auditing
};

/// Pass (nullopt) iff every surviving edge (u, v) of G \ F has
/// dist_{H^F}(u, v) <= stretch * w(u, v). Reports the violation with the
/// smallest edge id otherwise.
std::optional<Violation> stretch_ok_under(const Graph& g, const Emulator& h, const FaultSet& faults,
                                          double stretch,
                                          StretchScope scope = StretchScope::surviving_edges);

enum class Verdict { pass, fail, budget };
enum class StrategyKind { exhaustive, sampled, isolation };

std::string to_string(Verdict verdict);
std::string to_string(StrategyKind kind);
StrategyKind parse_strategy(const std::string& name);

struct VerifyOptions {
    StrategyKind strategy = StrategyKind::exhaustive;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::uint64_t budget_faultsets = 50'000'000;
    StretchScope scope = StretchScope::surviving_edges;
    std::size_t threads = 0;  // 0: default_parallelism()
};

struct Counterexample {
    FaultSet faults;
    Violation violation;
};

struct VerificationReport {
    Verdict verdict = Verdict::pass;
    StrategyKind strategy = StrategyKind::exhaustive;
    std::size_t sets_checked = 0;
    std::optional<Counterexample> counterexample;
    std::string note;
};

/*
 * Decides whether H is an f-EFT t-emulator of G.
 *
 * exhaustive: exact. Checks every fault set of size exactly f (sound by
 *   monotonicity of H^F distances in F) once m >= f + 1, every subset
 *   otherwise. Returns Verdict::budget when that family is larger than
 *   budget_faultsets.
 * sampled: `trials` uniform fault sets of size min(f, m-1); FAIL is
 *   definitive, PASS only means no violation was found.
 * isolation: the edge-isolation sets of size <= f; FAIL is definitive.
 */
VerificationReport verify_eft(const Graph& g, const Emulator& h, std::size_t f, double stretch,
                              const VerifyOptions& options = {});

/// Number of k-subsets of an m-set, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t m, std::uint64_t k);

/// Advances `combo` (sorted, values in 0..m-1) to the next k-subset in
/// lexicographic order; false after the last one.
bool next_combination(std::vector<EdgeId>& combo, std::size_t m);

}

#endif /* EFT_EMULATOR_HPP */
