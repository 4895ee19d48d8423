#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "sgt/template.hpp"

namespace sgt {

using Rational = boost::multiprecision::cpp_rational;

/// Deterministic 64-bit stream with unbiased bounded draws.  Golden
/// tests depend on this exact sampling scheme, so no std::distribution
/// types (their output is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed, 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);

    /// splitmix64 step; used to derive independent per-run streams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

/// One resolved move: the chosen successor and its probability at
/// choice time (exact form filled in when available).
struct Choice {
    VertexId dst = 0;
    double prob = 1.0;
    std::string prob_exact;
};

/// Decision procedure for player Even's vertices.  Stateful: a policy
/// instance covers a single play and is reset (or rebuilt) per play.
class EvenPolicy {
public:
    virtual ~EvenPolicy() = default;

    virtual Choice choose(VertexId v, Rng& rng) = 0;
    /// Would a move v->w get positive probability right now?
    virtual bool allows(VertexId v, VertexId w) const = 0;
    /// Replay an externally observed Even move (advances internal state
    /// exactly as choose() would have).
    virtual void observe(VertexId v, VertexId w) = 0;
    virtual void reset() = 0;
};

/// Pure finite-memory strategy: delete all P and C edges, then rotate
/// through the surviving successors of each Even vertex in input order.
class PureStrategy final : public EvenPolicy {
public:
    static PureStrategy extract(const StochasticGame& g, const StrategyTemplate& t);

    Choice choose(VertexId v, Rng& rng) override;
    bool allows(VertexId v, VertexId w) const override;
    void observe(VertexId v, VertexId w) override;
    void reset() override;

    const std::vector<VertexId>& allowed(VertexId v) const { return allowed_[v]; }
    /// Next move at v without advancing the cursor.
    VertexId peek(VertexId v) const;

    /// Even vertices whose successors were all deleted.  The play may
    /// never enter them; choose() there throws TemplateError.
    const VertexSet& dead_vertices() const { return dead_; }
    /// Throws TemplateError if some vertex of w is dead: the template
    /// was not winning (or was corrupted) on w.
    void require_alive(const VertexSet& w) const;

private:
    PureStrategy() = default;

    std::vector<std::vector<VertexId>> allowed_;
    std::vector<std::size_t> cursor_;
    VertexSet dead_;
};

/// Parameterized mixed strategy: delete P edges, give every surviving
/// edge weight 1, play d(v)(w)/sum d(v)(.), and after each use scale
/// co-live edges by alpha and live-group edges by beta.  Weights are
/// exact rationals, or doubles on the fast path.
class MixedStrategy final : public EvenPolicy {
public:
    /// Requires 0 < alpha < 1 <= beta; throws SemanticError otherwise.
    static MixedStrategy extract(const StochasticGame& g, const StrategyTemplate& t,
                                 const Rational& alpha, const Rational& beta,
                                 bool exact = true);

    Choice choose(VertexId v, Rng& rng) override;
    bool allows(VertexId v, VertexId w) const override;
    void observe(VertexId v, VertexId w) override;
    void reset() override;

    const std::vector<VertexId>& allowed(VertexId v) const { return allowed_[v]; }
    const VertexSet& dead_vertices() const { return dead_; }
    void require_alive(const VertexSet& w) const;

    /// Current probability of the move v->w (0 if not allowed).
    Rational probability(VertexId v, VertexId w) const;
    Rational weight(VertexId v, VertexId w) const;
    bool exact() const { return exact_; }

private:
    MixedStrategy() = default;
    std::size_t slot(VertexId v, VertexId w) const; // index into allowed_[v] or npos

    std::vector<std::vector<VertexId>> allowed_;
    std::vector<std::vector<Rational>> weight_q_;
    std::vector<std::vector<double>> weight_d_;
    std::vector<std::vector<unsigned char>> in_colive_;
    std::vector<std::vector<unsigned char>> in_live_;
    VertexSet dead_;
    Rational alpha_q_, beta_q_;
    double alpha_d_ = 0, beta_d_ = 0;
    bool exact_ = true;
};

/// Supplies player Odd's moves.  The paper quantifies over all Odd
/// strategies; tests and simulations instantiate concrete ones.
class Adversary {
public:
    virtual ~Adversary() = default;
    virtual Choice choose(const StochasticGame& g, VertexId v, Rng& rng) = 0;
    virtual void reset() {}
};

/// Picks uniformly among successors.
class UniformAdversary final : public Adversary {
public:
    Choice choose(const StochasticGame& g, VertexId v, Rng& rng) override;
};

/// Fixed memoryless table (vertex -> successor).  Vertices without an
/// entry fall back to the first successor.
class TableAdversary final : public Adversary {
public:
    explicit TableAdversary(std::vector<std::optional<VertexId>> choice)
        : choice_(std::move(choice))
    {
    }
    Choice choose(const StochasticGame& g, VertexId v, Rng& rng) override;

private:
    std::vector<std::optional<VertexId>> choice_;
};

/// Plays a fixed successor sequence; for directed tests.
class ScriptedAdversary final : public Adversary {
public:
    explicit ScriptedAdversary(std::vector<VertexId> moves) : moves_(std::move(moves)) {}
    Choice choose(const StochasticGame& g, VertexId v, Rng& rng) override;
    void reset() override { next_ = 0; }

private:
    std::vector<VertexId> moves_;
    std::size_t next_ = 0;
};

struct TranscriptStep {
    std::uint32_t index;
    VertexId src;
    Owner owner;
    VertexId chosen;
    double prob;
    std::string prob_exact;
};

/// Record of one play: start vertex, the seed that drove it, and each
/// resolved step.
struct PlayTranscript {
    VertexId start = 0;
    std::uint64_t seed = 0;
    std::vector<TranscriptStep> steps;

    std::vector<VertexId> vertices() const;
    /// One step per line: `step src owner chosen prob`.
    std::string dump() const;
};

/// Resolves one move from `current` (Even via policy, Odd via
/// adversary, Random uniformly) and returns the step record.
TranscriptStep step(const StochasticGame& g, EvenPolicy& even, Adversary& odd, VertexId current,
                    Rng& rng, std::uint32_t index = 0);

PlayTranscript play(const StochasticGame& g, EvenPolicy& even, Adversary& odd, VertexId start,
                    std::size_t steps, Rng& rng, std::uint64_t seed_note = 0);

struct ReplayResult {
    bool all_positive = true;
    std::optional<std::size_t> first_zero_step;
    Rational min_probability = 1; // over Even steps; 1 if none
};

/// Feeds a transcript's Even moves through a fresh copy of `mixed`,
/// checking each gets positive probability (weight updates applied as
/// the replay advances).
ReplayResult replay_through_mixed(const StochasticGame& g, MixedStrategy mixed,
                                  const PlayTranscript& t);

/// A short play legal for the parameterized strategy but impossible for
/// the pure one: starts at a co-live source inside `winning` and takes
/// a co-live (non-prohibited) edge.  Empty when no such edge exists.
std::optional<std::vector<VertexId>> colive_witness_play(const StochasticGame& g,
                                                         const StrategyTemplate& t,
                                                         const VertexSet& winning);

} // namespace sgt
