#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sgt/extraction.hpp"
#include "sgt/game.hpp"

namespace sgt {

/// One player's memoryless pure strategy: a single successor per
/// controlled vertex.
struct MemorylessProfile {
    std::vector<std::optional<VertexId>> choice;
};

/// Markov chain induced by fixing both players' memoryless choices;
/// Random vertices keep their uniform branching.  Only the support
/// matters for qualitative verdicts.
struct InducedChain {
    std::size_t size = 0;
    std::vector<std::vector<VertexId>> succ;

    static InducedChain induced(const StochasticGame& g, const MemorylessProfile& even,
                                const MemorylessProfile& odd);
};

/// Probability-1 verdict for the objective from `start`, by reachable
/// bottom-SCC analysis (graph-theoretic; no numerics).
bool chain_satisfies_almost_surely(const InducedChain& chain, const Objective& o, VertexId start);

struct OracleLimits {
    std::size_t max_vertices = 7;
    std::uint64_t max_profiles = 1'000'000; // per player, product of out-degrees
};

/// Ground-truth almost-sure winning set by exhaustive search over both
/// players' memoryless pure profiles (which suffice for these five
/// objectives).  Throws ResourceError when the game exceeds `limits`.
VertexSet oracle_winning_set(const StochasticGame& g, const Objective& o,
                             const OracleLimits& limits = {});

/// All ultimately periodic words with |prefix|+|cycle| <= k starting in
/// `from`, each exactly once in canonical form (shortest prefix,
/// primitive cycle).  Throws ResourceError past `budget` walk
/// extensions.
std::vector<Lasso> enumerate_lassos(const StochasticGame& g, const VertexSet& from, std::size_t k,
                                    std::uint64_t budget = kDefaultLassoBudget);

/// Canonical form of a lasso's word (shortest prefix, primitive cycle).
Lasso canonical_lasso(const Lasso& l);

using PolicyFactory = std::function<std::unique_ptr<EvenPolicy>()>;
using AdversaryFactory = std::function<std::unique_ptr<Adversary>()>;

struct SimulationConfig {
    std::size_t runs = 1000;
    std::size_t horizon = 0;
    std::uint64_t seed = 1;
};

struct LiveGroupStats {
    std::uint64_t touched = 0; // runs where a group source recurs after burn-in
    std::uint64_t fired = 0;   // of those, runs where a group edge was used
};

/// Aggregates over `runs` independent plays.  Safety/reachability
/// verdicts are exact on the finite prefix; the infinitary objectives
/// are judged on the post-burn-in suffix and flagged heuristic.
struct SimulationStats {
    std::size_t runs = 0;
    std::size_t horizon = 0;
    std::uint64_t seed = 0;
    std::size_t satisfied = 0;
    bool heuristic_verdict = false;

    std::uint64_t colive_uses_total = 0;
    std::map<Edge, std::uint64_t> colive_edge_uses;
    std::vector<std::uint32_t> colive_uses_per_run;
    std::vector<std::int64_t> colive_last_use_per_run; // -1 = never
    std::vector<LiveGroupStats> groups;

    Rational colive_uses_mean() const;
    std::string report(const Objective& o) const;
};

SimulationStats monte_carlo(const StochasticGame& g, const StrategyTemplate& t,
                            const PolicyFactory& make_policy,
                            const AdversaryFactory& make_adversary, const Objective& o,
                            VertexId start, const SimulationConfig& cfg);

} // namespace sgt
