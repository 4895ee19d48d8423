#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgt/errors.hpp"
#include "sgt/vertex_set.hpp"

namespace sgt {

enum class Owner : unsigned char { Even, Odd, Random };

const char* to_string(Owner o);

/// Directed edge (u,v).  Template components only ever hold edges whose
/// source is owned by player Even.
struct Edge {
    VertexId src;
    VertexId dst;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Turn-based stochastic game: a finite directed graph with a three-way
/// vertex partition (Even / Odd / Random).  Random vertices move
/// uniformly at random.  Vertices are dense integer ids; successor
/// lists keep their construction order.
///
/// Dead ends (out-degree 0) are representable so that restrictions can
/// report them, but a well-formed input game has none; parsing and
/// synthesis enforce that separately.
class StochasticGame {
public:
    StochasticGame(std::vector<Owner> owners,
                   std::vector<std::vector<VertexId>> successors);

    std::size_t vertex_count() const { return owners_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    Owner owner(VertexId v) const { return owners_[v]; }
    bool is_even(VertexId v) const { return owners_[v] == Owner::Even; }

    const std::vector<VertexId>& successors(VertexId v) const { return succ_[v]; }
    const VertexSet& successor_set(VertexId v) const { return succ_set_[v]; }
    bool has_edge(VertexId u, VertexId v) const
    {
        return u < vertex_count() && v < vertex_count() && succ_set_[u].test(v);
    }

    /// All vertices owned by o, as a bitset of capacity |V|.
    const VertexSet& vertices_of(Owner o) const;
    VertexSet all_vertices() const { return full_set(vertex_count()); }

    const VertexSet& dead_ends() const { return dead_; }
    bool has_dead_ends() const { return dead_.any(); }
    /// Throws SemanticError if some vertex has no outgoing edge.
    void require_total() const;

    /// Edge list in source-major, successor-list order.
    std::vector<Edge> edges() const;

    bool operator==(const StochasticGame& other) const
    {
        return owners_ == other.owners_ && succ_ == other.succ_;
    }

private:
    std::vector<Owner> owners_;
    std::vector<std::vector<VertexId>> succ_;
    std::vector<VertexSet> succ_set_;
    VertexSet even_, odd_, random_, dead_;
    std::size_t edge_count_ = 0;
};

/// Priority assignment p : V -> {0..d} for parity objectives.
struct PriorityFunction {
    std::vector<int> value;

    int max_priority() const;
    void validate(const StochasticGame& g) const;

    bool operator==(const PriorityFunction&) const = default;
};

/// Finite representation of an ultimately periodic play:
/// prefix . cycle^omega.  The prefix may be empty, the cycle may not.
struct Lasso {
    std::vector<VertexId> prefix;
    std::vector<VertexId> cycle;

    bool operator==(const Lasso&) const = default;
};

/// Throws StructuralError unless every consecutive pair (including
/// prefix->cycle head and the cycle wrap-around) is a game edge.
void validate_lasso(const StochasticGame& g, const Lasso& l);

/// Edges used exactly once: prefix-internal steps plus the
/// prefix->cycle boundary step (empty when the prefix is empty).
std::vector<Edge> lasso_transient_edges(const Lasso& l);
/// Edges used infinitely often: cycle-internal steps plus the wrap.
std::vector<Edge> lasso_recurring_edges(const Lasso& l);

VertexSet lasso_vertices(const Lasso& l, std::size_t capacity);
VertexSet lasso_cycle_vertices(const Lasso& l, std::size_t capacity);

enum class ObjectiveKind { Safety, Reachability, Buchi, CoBuchi, Parity };

const char* to_string(ObjectiveKind k);

/// One of the five winning objectives.  `target` is meaningful for the
/// four set-based kinds, `priorities` for Parity.
struct Objective {
    ObjectiveKind kind;
    VertexSet target;
    PriorityFunction priorities;

    static Objective safety(VertexSet x) { return {ObjectiveKind::Safety, std::move(x), {}}; }
    static Objective reachability(VertexSet x)
    {
        return {ObjectiveKind::Reachability, std::move(x), {}};
    }
    static Objective buchi(VertexSet x) { return {ObjectiveKind::Buchi, std::move(x), {}}; }
    static Objective cobuchi(VertexSet x) { return {ObjectiveKind::CoBuchi, std::move(x), {}}; }
    static Objective parity(PriorityFunction p)
    {
        return {ObjectiveKind::Parity, VertexSet(), std::move(p)};
    }
};

/// Truth of the objective on the infinite word prefix . cycle^omega.
bool lasso_satisfies(const StochasticGame& g, const Lasso& l, const Objective& o);

/// Result of removing a vertex set: the subgame on V \ removed with all
/// incident edges dropped, plus the id translation tables.
struct Restriction {
    StochasticGame game;
    std::vector<VertexId> to_original;               // subgame id -> original id
    std::vector<std::optional<VertexId>> to_sub;     // original id -> subgame id
    bool created_dead_end = false;
};

Restriction restrict(const StochasticGame& g, const VertexSet& removed);

} // namespace sgt
