#include "sgt/extraction.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <limits>

namespace sgt {

namespace mp = boost::multiprecision;

std::uint64_t Rng::below(std::uint64_t n)
{
    assert(n > 0);
    if (n == 1)
        return 0;
    // Reject draws past the largest multiple of n so residues stay unbiased.
    const std::uint64_t zone = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= zone);
    return r % n;
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

std::string rational_string(const Rational& q)
{
    const mp::cpp_int num = numerator(q);
    const mp::cpp_int den = denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string double_string(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

} // namespace

PureStrategy PureStrategy::extract(const StochasticGame& g, const StrategyTemplate& t)
{
    validate_template(g, t);
    PureStrategy s;
    const std::size_t n = g.vertex_count();
    s.allowed_.resize(n);
    s.cursor_.assign(n, 0);
    s.dead_ = VertexSet(n);
    for_each_vertex(g.vertices_of(Owner::Even), [&](VertexId v) {
        for (VertexId w : g.successors(v))
            if (!t.prohibited.count({v, w}) && !t.colive.count({v, w}))
                s.allowed_[v].push_back(w);
        if (s.allowed_[v].empty() && !g.successors(v).empty())
            s.dead_.set(v);
    });
    return s;
}

Choice PureStrategy::choose(VertexId v, Rng&)
{
    const auto& options = allowed_[v];
    if (options.empty())
        throw TemplateError("no allowed successor at vertex " + std::to_string(v) +
                            " after deleting prohibited and co-live edges");
    const VertexId w = options[cursor_[v]];
    cursor_[v] = (cursor_[v] + 1) % options.size();
    return {w, 1.0, "1"};
}

VertexId PureStrategy::peek(VertexId v) const
{
    const auto& options = allowed_[v];
    if (options.empty())
        throw TemplateError("no allowed successor at vertex " + std::to_string(v));
    return options[cursor_[v]];
}

bool PureStrategy::allows(VertexId v, VertexId w) const
{
    return !allowed_[v].empty() && allowed_[v][cursor_[v]] == w;
}

void PureStrategy::observe(VertexId v, VertexId w)
{
    const auto& options = allowed_[v];
    auto it = std::find(options.begin(), options.end(), w);
    if (it == options.end())
        return;
    cursor_[v] = (static_cast<std::size_t>(it - options.begin()) + 1) % options.size();
}

void PureStrategy::reset()
{
    std::fill(cursor_.begin(), cursor_.end(), 0);
}

void PureStrategy::require_alive(const VertexSet& w) const
{
    if (dead_.intersects(w))
        throw TemplateError("vertex " + std::to_string((dead_ & w).find_first()) +
                            " of the winning set has no allowed successor");
}

MixedStrategy MixedStrategy::extract(const StochasticGame& g, const StrategyTemplate& t,
                                     const Rational& alpha, const Rational& beta, bool exact)
{
    validate_template(g, t);
    if (!(alpha > 0 && alpha < 1))
        throw SemanticError("alpha must satisfy 0 < alpha < 1");
    if (beta < 1)
        throw SemanticError("beta must satisfy beta >= 1");

    MixedStrategy s;
    const std::size_t n = g.vertex_count();
    s.exact_ = exact;
    s.alpha_q_ = alpha;
    s.beta_q_ = beta;
    s.alpha_d_ = static_cast<double>(alpha);
    s.beta_d_ = static_cast<double>(beta);
    s.allowed_.resize(n);
    s.weight_q_.resize(n);
    s.weight_d_.resize(n);
    s.in_colive_.resize(n);
    s.in_live_.resize(n);
    s.dead_ = VertexSet(n);

    EdgeSet live_edges;
    for (const EdgeSet& group : t.live_groups)
        live_edges.insert(group.begin(), group.end());

    for_each_vertex(g.vertices_of(Owner::Even), [&](VertexId v) {
        for (VertexId w : g.successors(v)) {
            if (t.prohibited.count({v, w}))
                continue;
            s.allowed_[v].push_back(w);
            s.weight_q_[v].emplace_back(1);
            s.weight_d_[v].push_back(1.0);
            s.in_colive_[v].push_back(t.colive.count({v, w}) ? 1 : 0);
            s.in_live_[v].push_back(live_edges.count({v, w}) ? 1 : 0);
        }
        if (s.allowed_[v].empty() && !g.successors(v).empty())
            s.dead_.set(v);
    });
    return s;
}

std::size_t MixedStrategy::slot(VertexId v, VertexId w) const
{
    const auto& options = allowed_[v];
    auto it = std::find(options.begin(), options.end(), w);
    if (it == options.end())
        return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - options.begin());
}

Choice MixedStrategy::choose(VertexId v, Rng& rng)
{
    const auto& options = allowed_[v];
    if (options.empty())
        throw TemplateError("no allowed successor at vertex " + std::to_string(v) +
                            " after deleting prohibited edges");
    const std::uint64_t draw = rng.next();
    std::size_t pick = options.size() - 1;
    Choice c;
    if (exact_) {
        Rational total = 0;
        for (const Rational& q : weight_q_[v])
            total += q;
        // first k with cum_k * 2^64 > draw * total, exactly
        const Rational rhs = Rational(mp::cpp_int(draw)) * total;
        const Rational two64 = Rational(mp::cpp_int(1) << 64);
        Rational cum = 0;
        for (std::size_t i = 0; i < options.size(); ++i) {
            cum += weight_q_[v][i];
            if (cum * two64 > rhs) {
                pick = i;
                break;
            }
        }
        const Rational p = weight_q_[v][pick] / total;
        c = {options[pick], static_cast<double>(p), rational_string(p)};
    } else {
        double total = 0;
        for (double d : weight_d_[v])
            total += d;
        const double threshold = (static_cast<double>(draw) / 18446744073709551616.0) * total;
        double cum = 0;
        for (std::size_t i = 0; i < options.size(); ++i) {
            cum += weight_d_[v][i];
            if (cum > threshold) {
                pick = i;
                break;
            }
        }
        const double p = weight_d_[v][pick] / total;
        c = {options[pick], p, double_string(p)};
    }
    observe(v, c.dst);
    return c;
}

bool MixedStrategy::allows(VertexId v, VertexId w) const
{
    return slot(v, w) != static_cast<std::size_t>(-1);
}

void MixedStrategy::observe(VertexId v, VertexId w)
{
    const std::size_t i = slot(v, w);
    if (i == static_cast<std::size_t>(-1))
        return;
    if (in_colive_[v][i]) {
        weight_q_[v][i] *= alpha_q_;
        weight_d_[v][i] *= alpha_d_;
    }
    if (in_live_[v][i]) {
        weight_q_[v][i] *= beta_q_;
        weight_d_[v][i] *= beta_d_;
    }
    // fast-path saturation; the exact path never needs it
    if (!exact_) {
        double& d = weight_d_[v][i];
        d = std::min(std::max(d, 1e-300), 1e300);
    }
}

void MixedStrategy::reset()
{
    for (auto& row : weight_q_)
        std::fill(row.begin(), row.end(), Rational(1));
    for (auto& row : weight_d_)
        std::fill(row.begin(), row.end(), 1.0);
}

void MixedStrategy::require_alive(const VertexSet& w) const
{
    if (dead_.intersects(w))
        throw TemplateError("vertex " + std::to_string((dead_ & w).find_first()) +
                            " of the winning set has every edge prohibited");
}

Rational MixedStrategy::weight(VertexId v, VertexId w) const
{
    const std::size_t i = slot(v, w);
    if (i == static_cast<std::size_t>(-1))
        return 0;
    return weight_q_[v][i];
}

Rational MixedStrategy::probability(VertexId v, VertexId w) const
{
    const std::size_t i = slot(v, w);
    if (i == static_cast<std::size_t>(-1))
        return 0;
    Rational total = 0;
    for (const Rational& q : weight_q_[v])
        total += q;
    return weight_q_[v][i] / total;
}

Choice UniformAdversary::choose(const StochasticGame& g, VertexId v, Rng& rng)
{
    const auto& s = g.successors(v);
    if (s.empty())
        throw StructuralError("adversary asked to move at dead end " + std::to_string(v));
    const std::size_t i = rng.below(s.size());
    return {s[i], 1.0 / static_cast<double>(s.size()), "1/" + std::to_string(s.size())};
}

Choice TableAdversary::choose(const StochasticGame& g, VertexId v, Rng&)
{
    const auto& s = g.successors(v);
    if (s.empty())
        throw StructuralError("adversary asked to move at dead end " + std::to_string(v));
    if (v < choice_.size() && choice_[v]) {
        if (!g.has_edge(v, *choice_[v]))
            throw StructuralError("adversary table entry " + std::to_string(v) + "->" +
                                  std::to_string(*choice_[v]) + " is not an edge");
        return {*choice_[v], 1.0, "1"};
    }
    return {s.front(), 1.0, "1"};
}

Choice ScriptedAdversary::choose(const StochasticGame& g, VertexId v, Rng&)
{
    if (next_ >= moves_.size())
        throw StructuralError("scripted adversary ran out of moves");
    const VertexId w = moves_[next_++];
    if (!g.has_edge(v, w))
        throw StructuralError("scripted move " + std::to_string(v) + "->" + std::to_string(w) +
                              " is not an edge");
    return {w, 1.0, "1"};
}

std::vector<VertexId> PlayTranscript::vertices() const
{
    std::vector<VertexId> out{start};
    for (const TranscriptStep& s : steps)
        out.push_back(s.chosen);
    return out;
}

std::string PlayTranscript::dump() const
{
    std::string out;
    for (const TranscriptStep& s : steps) {
        out += std::to_string(s.index);
        out += ' ';
        out += std::to_string(s.src);
        out += ' ';
        out += to_string(s.owner);
        out += ' ';
        out += std::to_string(s.chosen);
        out += ' ';
        out += s.prob_exact.empty() ? double_string(s.prob) : s.prob_exact;
        out += '\n';
    }
    return out;
}

TranscriptStep step(const StochasticGame& g, EvenPolicy& even, Adversary& odd, VertexId current,
                    Rng& rng, std::uint32_t index)
{
    Choice c;
    switch (g.owner(current)) {
    case Owner::Even: c = even.choose(current, rng); break;
    case Owner::Odd: c = odd.choose(g, current, rng); break;
    case Owner::Random: {
        const auto& s = g.successors(current);
        if (s.empty())
            throw StructuralError("play reached dead end " + std::to_string(current));
        const std::size_t i = rng.below(s.size());
        c = {s[i], 1.0 / static_cast<double>(s.size()), "1/" + std::to_string(s.size())};
        break;
    }
    }
    return {index, current, g.owner(current), c.dst, c.prob, c.prob_exact};
}

PlayTranscript play(const StochasticGame& g, EvenPolicy& even, Adversary& odd, VertexId start,
                    std::size_t steps, Rng& rng, std::uint64_t seed_note)
{
    PlayTranscript t;
    t.start = start;
    t.seed = seed_note;
    VertexId cur = start;
    for (std::size_t i = 0; i < steps; ++i) {
        TranscriptStep s = step(g, even, odd, cur, rng, static_cast<std::uint32_t>(i));
        cur = s.chosen;
        t.steps.push_back(std::move(s));
    }
    return t;
}

ReplayResult replay_through_mixed(const StochasticGame& g, MixedStrategy mixed,
                                  const PlayTranscript& t)
{
    mixed.reset();
    ReplayResult r;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TranscriptStep& s = t.steps[i];
        if (g.owner(s.src) != Owner::Even)
            continue;
        const Rational p = mixed.probability(s.src, s.chosen);
        if (p == 0) {
            r.all_positive = false;
            if (!r.first_zero_step)
                r.first_zero_step = i;
        } else if (p < r.min_probability) {
            r.min_probability = p;
        }
        mixed.observe(s.src, s.chosen);
    }
    return r;
}

std::optional<std::vector<VertexId>> colive_witness_play(const StochasticGame& g,
                                                         const StrategyTemplate& t,
                                                         const VertexSet& winning)
{
    for (const Edge& e : t.colive) {
        if (t.prohibited.count(e))
            continue;
        if (e.src < winning.size() && winning.test(e.src) && g.has_edge(e.src, e.dst))
            return std::vector<VertexId>{e.src, e.dst};
    }
    return std::nullopt;
}

} // namespace sgt
