#pragma once

#include "sgt/template.hpp"

namespace sgt {

/// Winning set plus a strategy template that is winning on it.
struct SynthesisResult {
    VertexSet winning_set;
    StrategyTemplate tpl;
};

/// Edges from Even vertices of `from` into `to`.
EdgeSet edges_even(const StochasticGame& g, const VertexSet& from, const VertexSet& to);

/// W = nuY.(X n (Pre_Even(Y) u Pre(Y))); P = Even edges leaving W.
SynthesisResult safety_template(const StochasticGame& g, const VertexSet& x);

/// A = Attr'(X); W = Attr'_Even(A); C = Even edges inside W \ A.
SynthesisResult reachability_template(const StochasticGame& g, const VertexSet& x);

/// W = Büchi fixpoint; live-groups lead stepwise back into the target.
SynthesisResult buchi_template(const StochasticGame& g, const VertexSet& x);

/// Safety core of X, then the reachability construction towards it;
/// co-live edges also forbid recurring escapes from the core.
SynthesisResult cobuchi_template(const StochasticGame& g, const VertexSet& x);

/// Gadget reduction, deterministic template, back-mapping.
SynthesisResult parity_template(const StochasticGame& g, const PriorityFunction& p);

SynthesisResult synthesize(const StochasticGame& g, const Objective& o);

/// The iterated groups Edges_Even(X_i \ A_i, A_i) with A = Attr'(X),
/// X = A u Pre_Even(A), until X = A.  Never emits an empty group.
std::vector<EdgeSet> live_groups(const StochasticGame& g, const VertexSet& x);
std::vector<EdgeSet> live_groups_in(const StochasticGame& g, const VertexSet& active,
                                    const VertexSet& x);

/// Deterministic parity game obtained by replacing each Random vertex
/// of priority p with a 3-layer gadget: an Odd root, Even children
/// 0..ceil(p/2), and grandchildren 0..p of priority j (Odd for even j)
/// that inherit all original out-edges.  Original vertices keep their
/// ids; gadget vertices are appended.
struct ReducedGame {
    StochasticGame game;
    PriorityFunction priorities;
    std::vector<std::optional<VertexId>> to_original; // nullopt = gadget-internal
    std::vector<VertexId> to_reduced;                 // original -> image
};

ReducedGame reduce(const StochasticGame& g, const PriorityFunction& p);

struct Partition {
    VertexSet even_winning;
    VertexSet odd_winning;
};

/// Zielonka's recursion.  Requires a deterministic game (no Random
/// vertices) with out-degree >= 1 everywhere.
Partition zielonka_solve(const StochasticGame& g, const PriorityFunction& p);

/// Zielonka extended to also accumulate live-groups on even-priority
/// rounds and co-live edges on odd-priority rounds; the prohibited set
/// for the caller is Edges_Even(even_winning, odd_winning).
struct DetTemplateResult {
    VertexSet even_winning;
    VertexSet odd_winning;
    std::vector<EdgeSet> live_groups;
    EdgeSet colive;
};

DetTemplateResult det_parity_template(const StochasticGame& g, const PriorityFunction& p);

} // namespace sgt
