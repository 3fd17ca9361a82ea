#include "eft/emulator.hpp"

#include <algorithm>
#include <random>

#include "eft/generators.hpp"
#include "eft/lower_bound.hpp"
#include "eft/parallel.hpp"

namespace eft {

Emulator::Emulator(const Graph& base)
    : mask_(base.edge_count(), 0), ordering_(base), base_nodes_(base.node_count()) {}

Emulator::Emulator(const Graph& base, std::vector<EdgeId> members,
                   std::map<EdgeId, FaultSet> witnesses)
    : Emulator(base) {
    for (EdgeId e : members) {
        base.require_edge(e);
        if (mask_[e]) {
            throw InputError("emulator lists edge " + std::to_string(e) + " twice");
        }
        mask_[e] = 1;
    }
    members_ = std::move(members);
    std::sort(members_.begin(), members_.end(), [&](EdgeId x, EdgeId y) {
        return ordering_.precedes(x, y);
    });
    for (auto& [e, faults] : witnesses) {
        if (!contains(e)) {
            throw InputError("witness recorded for non-member edge " + std::to_string(e));
        }
        faults.require_within(base);
    }
    witnesses_ = std::move(witnesses);
}

Emulator Emulator::complete(const Graph& base) {
    std::vector<EdgeId> all(base.edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) {
        all[e] = e;
    }
    return Emulator(base, std::move(all));
}

void Emulator::add(EdgeId e, std::optional<FaultSet> witness) {
    if (e >= mask_.size()) {
        throw InputError("edge id " + std::to_string(e) + " is not an edge of the base graph");
    }
    if (mask_[e]) {
        throw InputError("edge " + std::to_string(e) + " is already a member");
    }
    if (!members_.empty() && !ordering_.precedes(members_.back(), e)) {
        throw InputError("edges must be added in processing order");
    }
    mask_[e] = 1;
    members_.push_back(e);
    if (witness) {
        witnesses_[e] = std::move(*witness);
    }
}

const FaultSet* Emulator::witness(EdgeId e) const {
    auto it = witnesses_.find(e);
    return it == witnesses_.end() ? nullptr : &it->second;
}

std::size_t Emulator::max_witness_size() const {
    std::size_t best = 0;
    for (const auto& [e, faults] : witnesses_) {
        best = std::max(best, faults.size());
    }
    return best;
}

void Emulator::require_base(const Graph& graph) const {
    if (graph.edge_count() != mask_.size() || graph.node_count() != base_nodes_) {
        throw InputError("emulator was built over a different base graph");
    }
}

Reweighter::Reweighter(const Graph& graph)
    : graph_(&graph), tight_(graph.edge_count(), 0), search_(graph) {
    // one search per node that owns an edge as its first endpoint
    std::vector<std::vector<EdgeId>> by_source(graph.node_count());
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        by_source[graph.edge(e).a].push_back(e);
    }
    for (NodeId x = 0; x < graph.node_count(); ++x) {
        if (by_source[x].empty()) {
            continue;
        }
        double cutoff = 0.0;
        for (EdgeId e : by_source[x]) {
            cutoff = std::max(cutoff, graph.edge(e).weight);
        }
        search_.run(x, {}, {}, std::nullopt, cutoff);
        for (EdgeId e : by_source[x]) {
            tight_[e] = !exceeds(graph.edge(e).weight, search_.distance(graph.edge(e).b));
        }
    }
}

void Reweighter::reweight(const Emulator& h, std::span<const char> fault_mask,
                          std::vector<Length>& weights) {
    const Graph& g = *graph_;
    weights.assign(g.edge_count(), kInfinity);
    pending_.clear();
    for (EdgeId e : h.members()) {
        const bool faulted = !fault_mask.empty() && fault_mask[e];
        if (!faulted && tight_[e]) {
            weights[e] = g.edge(e).weight;
        } else {
            pending_.push_back(e);
        }
    }
    std::sort(pending_.begin(), pending_.end(), [&](EdgeId x, EdgeId y) {
        return g.edge(x).a < g.edge(y).a;
    });
    std::size_t i = 0;
    while (i < pending_.size()) {
        NodeId source = g.edge(pending_[i]).a;
        search_.run(source, {}, fault_mask);
        for (; i < pending_.size() && g.edge(pending_[i]).a == source; ++i) {
            weights[pending_[i]] = search_.distance(g.edge(pending_[i]).b);
        }
    }
}

Length Reweighter::emulator_distance(std::span<const Length> weights, NodeId s, NodeId t,
                                     Length cutoff) {
    if (s == t) {
        return 0.0;
    }
    search_.run(s, weights, {}, t, cutoff);
    return search_.distance(t);
}

ReweightedView reweight(const Graph& g, const Emulator& h, const FaultSet& faults) {
    h.require_base(g);
    faults.require_within(g);
    Reweighter reweighter(g);
    ReweightedView view;
    view.faults = faults;
    reweighter.reweight(h, faults.mask(g.edge_count()), view.weights);
    return view;
}

namespace {

// per-worker state for repeated stretch checks over one (G, H) pair
class StretchChecker {
public:
    StretchChecker(const Reweighter& prototype, const Emulator& h, double stretch,
                   StretchScope scope)
        : rw_(prototype), h_(&h), stretch_(stretch), scope_(scope),
          search_(prototype.graph()), memo_(prototype.graph().node_count()),
          have_(prototype.graph().node_count(), 0) {}

    std::optional<Violation> check(const FaultSet& faults) {
        const Graph& g = rw_.graph();
        fault_mask_ = faults.mask(g.edge_count());
        rw_.reweight(*h_, fault_mask_, weights_);
        std::fill(have_.begin(), have_.end(), 0);
        return scope_ == StretchScope::all_pairs ? all_pairs() : surviving_edges();
    }

private:
    const std::vector<Length>& from(NodeId s) {
        if (!have_[s]) {
            search_.run(s, weights_);
            memo_[s] = search_.distances();
            have_[s] = 1;
        }
        return memo_[s];
    }

    std::optional<Violation> surviving_edges() {
        const Graph& g = rw_.graph();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            // members outside F reweight to at most their own weight
            if (fault_mask_[e] || h_->contains(e)) {
                continue;
            }
            const Edge& edge = g.edge(e);
            Length achieved = from(edge.a)[edge.b];
            Length bound = stretch_ * edge.weight;
            if (exceeds(achieved, bound)) {
                return Violation{edge.a, edge.b, e, achieved, bound};
            }
        }
        return std::nullopt;
    }

    std::optional<Violation> all_pairs() {
        const Graph& g = rw_.graph();
        ShortestPaths base(g);
        for (NodeId s = 0; s < g.node_count(); ++s) {
            base.run(s, {}, fault_mask_);
            const auto& emulated = from(s);
            for (NodeId t = s + 1; t < g.node_count(); ++t) {
                Length bound = stretch_ * base.distance(t);
                if (exceeds(emulated[t], bound)) {
                    std::optional<EdgeId> edge = g.find_edge(s, t);
                    if (edge && fault_mask_[*edge]) {
                        edge.reset();
                    }
                    return Violation{s, t, edge, emulated[t], bound};
                }
            }
        }
        return std::nullopt;
    }

    Reweighter rw_;
    const Emulator* h_;
    double stretch_;
    StretchScope scope_;
    ShortestPaths search_;
    std::vector<std::vector<Length>> memo_;
    std::vector<char> have_;
    std::vector<char> fault_mask_;
    std::vector<Length> weights_;
};

}

std::optional<Violation> stretch_ok_under(const Graph& g, const Emulator& h, const FaultSet& faults,
                                          double stretch, StretchScope scope) {
    h.require_base(g);
    faults.require_within(g);
    if (stretch < 1.0) {
        throw InputError("stretch must be at least 1");
    }
    Reweighter reweighter(g);
    StretchChecker checker(reweighter, h, stretch, scope);
    return checker.check(faults);
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::budget: return "BUDGET";
    }
    return "UNKNOWN";
}

std::string to_string(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::exhaustive: return "exhaustive";
    case StrategyKind::sampled: return "sampled";
    case StrategyKind::isolation: return "isolation";
    }
    return "unknown";
}

StrategyKind parse_strategy(const std::string& name) {
    if (name == "exhaustive") return StrategyKind::exhaustive;
    if (name == "sampled") return StrategyKind::sampled;
    if (name == "isolation") return StrategyKind::isolation;
    throw InputError("unknown verification strategy '" + name + "'");
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
    if (k > m) {
        return 0;
    }
    k = std::min(k, m - k);
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        value = value * (m - k + i) / i;
        if (value > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(value);
}

bool next_combination(std::vector<EdgeId>& combo, std::size_t m) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < m - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

VerificationReport verify_eft(const Graph& g, const Emulator& h, std::size_t f, double stretch,
                              const VerifyOptions& options) {
    h.require_base(g);
    if (stretch < 1.0) {
        throw InputError("stretch must be at least 1");
    }
    const std::size_t m = g.edge_count();
    const std::size_t threads = options.threads ? options.threads : default_parallelism();

    VerificationReport report;
    report.strategy = options.strategy;

    // fault sets of size min(f, m - 1) dominate every smaller set that
    // leaves some edge surviving
    const std::size_t size = m == 0 ? 0 : std::min(f, m - 1);

    std::function<bool(FaultSet&)> next;
    std::vector<EdgeId> combo;
    bool first = true;
    std::mt19937_64 rng(options.seed);
    std::size_t drawn = 0;
    EdgeId isolation_cursor = 0;

    switch (options.strategy) {
    case StrategyKind::exhaustive: {
        const std::uint64_t count = binomial(m, size);
        if (count > options.budget_faultsets) {
            report.verdict = Verdict::budget;
            report.note = "exhaustive family of " + std::to_string(count)
                          + " fault sets exceeds the budget of "
                          + std::to_string(options.budget_faultsets);
            return report;
        }
        combo.resize(size);
        for (std::size_t i = 0; i < size; ++i) {
            combo[i] = static_cast<EdgeId>(i);
        }
        next = [&](FaultSet& out) {
            if (!first && !next_combination(combo, m)) {
                return false;
            }
            first = false;
            out = FaultSet(combo);
            return true;
        };
        break;
    }
    case StrategyKind::sampled: {
        std::vector<EdgeId> pool(m);
        for (EdgeId e = 0; e < m; ++e) {
            pool[e] = e;
        }
        next = [&, pool](FaultSet& out) mutable {
            if (drawn >= options.trials) {
                return false;
            }
            ++drawn;
            // partial Fisher-Yates: the first `size` slots form a uniform subset
            for (std::size_t i = 0; i < size; ++i) {
                std::size_t j = i + uniform_below(rng, m - i);
                std::swap(pool[i], pool[j]);
            }
            out = FaultSet(std::vector<EdgeId>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size)));
            return true;
        };
        break;
    }
    case StrategyKind::isolation: {
        next = [&](FaultSet& out) {
            while (isolation_cursor < m) {
                FaultSet candidate = isolation_fault_set(g, isolation_cursor++);
                if (candidate.size() <= f) {
                    out = std::move(candidate);
                    return true;
                }
            }
            return false;
        };
        break;
    }
    }

    Reweighter prototype(g);
    auto make_worker = [&]() {
        return [checker = StretchChecker(prototype, h, stretch, options.scope)](const FaultSet& faults) mutable {
            return checker.check(faults).has_value();
        };
    };
    FirstMatch<FaultSet> found = find_first<FaultSet>(next, make_worker, threads);
    if (found.item) {
        StretchChecker checker(prototype, h, stretch, options.scope);
        report.verdict = Verdict::fail;
        report.sets_checked = found.index + 1;
        report.counterexample = Counterexample{*found.item, *checker.check(*found.item)};
    } else {
        report.verdict = Verdict::pass;
        report.sets_checked = found.index;
    }
    return report;
}

}
