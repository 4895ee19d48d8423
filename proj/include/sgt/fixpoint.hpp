#pragma once

#include "sgt/game.hpp"

namespace sgt {

/// Outer Kleene iterates of a fixpoint computation; debug aid only.
/// Iterates grow for least fixpoints and shrink for greatest ones.
struct FixpointTrace {
    std::vector<VertexSet> iterates;
};

// One-step predecessor operators.  The `_in` variants view the subgame
// induced by `active`: vertices outside `active` never qualify and
// successors outside it are ignored.  A vertex with no surviving
// successor is in no Pre set.

/// Pre(X): vertices all of whose successors lie in X.
VertexSet pre(const StochasticGame& g, const VertexSet& x);
VertexSet pre_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x);

/// Pre_Even(X): Even vertices with some successor in X.
VertexSet pre_even(const StochasticGame& g, const VertexSet& x);
VertexSet pre_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x);

/// Pre_Odd(X): Odd vertices with some successor in X.
VertexSet pre_odd(const StochasticGame& g, const VertexSet& x);
VertexSet pre_odd_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x);

/// Pre_Random(X', X): Random vertices whose successors all lie in X'
/// and at least one lies in X.
VertexSet pre_random(const StochasticGame& g, const VertexSet& x_all, const VertexSet& x_some);
VertexSet pre_random_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x_all,
                        const VertexSet& x_some);

// Attractors as least fixpoints, by Kleene iteration from the empty set.

/// Attr(X) = muY.(X u Pre(Y)).
VertexSet attr(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace = nullptr);
VertexSet attr_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                  FixpointTrace* trace = nullptr);

/// Attr_Even(X) = muY.(X u Pre(Y) u Pre_Even(Y)).
VertexSet attr_even(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace = nullptr);
VertexSet attr_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                       FixpointTrace* trace = nullptr);

/// Attr_Odd(X) = muY.(X u Pre(Y) u Pre_Odd(Y)).
VertexSet attr_odd(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace = nullptr);
VertexSet attr_odd_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                      FixpointTrace* trace = nullptr);

/// Attr'(X) = nuZ.muY.(X u Pre(Y) u Pre_Random(Z,Y)): the set from
/// which every play reaches X almost-surely, regardless of either
/// player's choices.
VertexSet attr_prime(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace = nullptr);
VertexSet attr_prime_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                        FixpointTrace* trace = nullptr);

/// Attr'_Even(X) = nuZ.muY.(X u Pre_Even(Y) u Pre(Y) u Pre_Random(Z,Y)):
/// Even's almost-sure winning set for reaching X.
VertexSet attr_prime_even(const StochasticGame& g, const VertexSet& x,
                          FixpointTrace* trace = nullptr);
VertexSet attr_prime_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                             FixpointTrace* trace = nullptr);

/// Even's almost-sure winning set for visiting X infinitely often:
/// nuZ.muY.((X n (Pre_Even(Z) u Pre(Z))) u Pre_Even(Y) u Pre(Y) u Pre_Random(Z,Y)).
VertexSet buchi_winning_set(const StochasticGame& g, const VertexSet& x,
                            FixpointTrace* trace = nullptr);
VertexSet buchi_winning_set_in(const StochasticGame& g, const VertexSet& active,
                               const VertexSet& x, FixpointTrace* trace = nullptr);

} // namespace sgt
