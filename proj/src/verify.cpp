#include "sgt/verify.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <unordered_set>

namespace sgt {

namespace {

std::string fixed6(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string rational_report(const Rational& q)
{
    const auto num = numerator(q);
    const auto den = denominator(q);
    std::string s = num.str();
    if (den != 1)
        s += "/" + den.str();
    s += " (" + fixed6(static_cast<double>(q)) + ")";
    return s;
}

// Tarjan, iterative.  Component ids come out in completion order, so
// every edge goes from a component to one of equal or smaller id.
struct Sccs {
    std::vector<int> comp;
    int count = 0;
    std::vector<bool> bottom;
};

Sccs scc_decompose(const std::vector<std::vector<VertexId>>& succ)
{
    const std::size_t n = succ.size();
    Sccs out;
    out.comp.assign(n, -1);

    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    int next_index = 0;

    struct Frame {
        VertexId v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < succ[f.v].size()) {
                const VertexId w = succ[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        const VertexId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        out.comp[w] = out.count;
                        if (w == f.v)
                            break;
                    }
                    ++out.count;
                }
                const VertexId done = f.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[done]);
            }
        }
    }

    out.bottom.assign(out.count, true);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : succ[v])
            if (out.comp[v] != out.comp[w])
                out.bottom[out.comp[v]] = false;
    return out;
}

VertexSet reachable_from(const std::vector<std::vector<VertexId>>& succ, std::size_t n,
                         VertexId start, const VertexSet* avoid = nullptr)
{
    VertexSet seen(n);
    if (avoid && avoid->test(start))
        return seen;
    std::vector<VertexId> todo{start};
    seen.set(start);
    while (!todo.empty()) {
        const VertexId v = todo.back();
        todo.pop_back();
        for (VertexId w : succ[v]) {
            if (seen.test(w) || (avoid && avoid->test(w)))
                continue;
            seen.set(w);
            todo.push_back(w);
        }
    }
    return seen;
}

} // namespace

InducedChain InducedChain::induced(const StochasticGame& g, const MemorylessProfile& even,
                                   const MemorylessProfile& odd)
{
    InducedChain c;
    c.size = g.vertex_count();
    c.succ.resize(c.size);
    for (VertexId v = 0; v < c.size; ++v) {
        switch (g.owner(v)) {
        case Owner::Even:
            assert(v < even.choice.size() && even.choice[v] && g.has_edge(v, *even.choice[v]));
            c.succ[v] = {*even.choice[v]};
            break;
        case Owner::Odd:
            assert(v < odd.choice.size() && odd.choice[v] && g.has_edge(v, *odd.choice[v]));
            c.succ[v] = {*odd.choice[v]};
            break;
        case Owner::Random: c.succ[v] = g.successors(v); break;
        }
    }
    return c;
}

bool chain_satisfies_almost_surely(const InducedChain& chain, const Objective& o, VertexId start)
{
    const std::size_t n = chain.size;
    const VertexSet reach = reachable_from(chain.succ, n, start);

    switch (o.kind) {
    case ObjectiveKind::Safety:
        return reach.is_subset_of(o.target);
    case ObjectiveKind::Reachability: {
        if (o.target.test(start))
            return true;
        // Failing with positive probability means reaching, while
        // avoiding the target, a bottom SCC disjoint from it.
        const VertexSet avoid_reach = reachable_from(chain.succ, n, start, &o.target);
        const Sccs sccs = scc_decompose(chain.succ);
        std::vector<char> comp_hits_target(sccs.count, 0);
        for_each_vertex(o.target, [&](VertexId v) {
            if (v < n)
                comp_hits_target[sccs.comp[v]] = 1;
        });
        bool ok = true;
        for_each_vertex(avoid_reach, [&](VertexId v) {
            const int cmp = sccs.comp[v];
            if (sccs.bottom[cmp] && !comp_hits_target[cmp])
                ok = false;
        });
        return ok;
    }
    case ObjectiveKind::Buchi:
    case ObjectiveKind::CoBuchi:
    case ObjectiveKind::Parity: {
        const Sccs sccs = scc_decompose(chain.succ);
        std::vector<char> seen_comp(sccs.count, 0);
        for_each_vertex(reach, [&](VertexId v) { seen_comp[sccs.comp[v]] = 1; });
        for (int cmp = 0; cmp < sccs.count; ++cmp) {
            if (!seen_comp[cmp] || !sccs.bottom[cmp])
                continue;
            bool intersects = false, contained = true;
            int min_priority = -1;
            for (VertexId v = 0; v < n; ++v) {
                if (sccs.comp[v] != cmp)
                    continue;
                if (o.kind != ObjectiveKind::Parity) {
                    if (o.target.test(v))
                        intersects = true;
                    else
                        contained = false;
                } else {
                    const int p = o.priorities.value[v];
                    if (min_priority < 0 || p < min_priority)
                        min_priority = p;
                }
            }
            if (o.kind == ObjectiveKind::Buchi && !intersects)
                return false;
            if (o.kind == ObjectiveKind::CoBuchi && !contained)
                return false;
            if (o.kind == ObjectiveKind::Parity && min_priority % 2 != 0)
                return false;
        }
        return true;
    }
    }
    return false;
}

namespace {

// Odometer over one player's choices; yields every memoryless profile.
class ProfileIter {
public:
    ProfileIter(const StochasticGame& g, Owner player) : game_(g)
    {
        for_each_vertex(g.vertices_of(player), [&](VertexId v) { owned_.push_back(v); });
        slots_.assign(owned_.size(), 0);
    }

    std::uint64_t count() const
    {
        std::uint64_t c = 1;
        for (VertexId v : owned_) {
            c *= game_.successors(v).size();
            if (c > (std::uint64_t(1) << 62))
                return c; // saturating; caller checks budget anyway
        }
        return c;
    }

    MemorylessProfile profile() const
    {
        MemorylessProfile p;
        p.choice.resize(game_.vertex_count());
        for (std::size_t i = 0; i < owned_.size(); ++i)
            p.choice[owned_[i]] = game_.successors(owned_[i])[slots_[i]];
        return p;
    }

    bool advance()
    {
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (++slots_[i] < game_.successors(owned_[i]).size())
                return true;
            slots_[i] = 0;
        }
        return false;
    }

private:
    const StochasticGame& game_;
    std::vector<VertexId> owned_;
    std::vector<std::size_t> slots_;
};

} // namespace

VertexSet oracle_winning_set(const StochasticGame& g, const Objective& o,
                             const OracleLimits& limits)
{
    g.require_total();
    const std::size_t n = g.vertex_count();
    if (n > limits.max_vertices)
        throw ResourceError("oracle limited to " + std::to_string(limits.max_vertices) +
                            " vertices, game has " + std::to_string(n));

    ProfileIter even_iter(g, Owner::Even);
    ProfileIter odd_iter(g, Owner::Odd);
    if (even_iter.count() > limits.max_profiles || odd_iter.count() > limits.max_profiles)
        throw ResourceError("oracle profile budget exceeded");

    VertexSet winning(n);
    do {
        const MemorylessProfile even = even_iter.profile();
        VertexSet wins_everywhere = g.all_vertices();
        ProfileIter odd(g, Owner::Odd);
        do {
            const InducedChain chain = InducedChain::induced(g, even, odd.profile());
            for_each_vertex(wins_everywhere, [&](VertexId v) {
                if (!chain_satisfies_almost_surely(chain, o, v))
                    wins_everywhere.reset(v);
            });
        } while (wins_everywhere.any() && odd.advance());
        winning |= wins_everywhere;
    } while (even_iter.advance());
    return winning;
}

Lasso canonical_lasso(const Lasso& l)
{
    Lasso out = l;
    // primitive cycle
    const std::size_t len = out.cycle.size();
    for (std::size_t q = 1; q <= len / 2; ++q) {
        if (len % q != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = q; i < len && periodic; ++i)
            periodic = out.cycle[i] == out.cycle[i % q];
        if (periodic) {
            out.cycle.resize(q);
            break;
        }
    }
    // shortest prefix: fold trailing prefix vertices into the cycle
    while (!out.prefix.empty() && out.prefix.back() == out.cycle.back()) {
        out.prefix.pop_back();
        std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
    }
    return out;
}

std::vector<Lasso> enumerate_lassos(const StochasticGame& g, const VertexSet& from, std::size_t k,
                                    std::uint64_t budget)
{
    if (k < 1)
        throw SemanticError("lasso bound k must be >= 1");
    g.require_total();

    std::vector<Lasso> out;
    std::unordered_set<std::string> seen;
    std::vector<VertexId> walk;
    std::uint64_t steps = 0;

    auto emit = [&](std::size_t split) {
        Lasso raw;
        raw.prefix.assign(walk.begin(), walk.begin() + static_cast<long>(split));
        raw.cycle.assign(walk.begin() + static_cast<long>(split), walk.end());
        Lasso canon = canonical_lasso(raw);
        std::string key;
        key.reserve((canon.prefix.size() + canon.cycle.size()) * 3 + 1);
        for (VertexId v : canon.prefix) {
            key += std::to_string(v);
            key += ',';
        }
        key += '|';
        for (VertexId v : canon.cycle) {
            key += std::to_string(v);
            key += ',';
        }
        if (seen.insert(std::move(key)).second)
            out.push_back(std::move(canon));
    };

    auto go = [&](auto&& self) -> void {
        if (++steps > budget)
            throw ResourceError("lasso enumeration budget exceeded");
        const VertexId last = walk.back();
        for (std::size_t split = 0; split < walk.size(); ++split)
            if (g.has_edge(last, walk[split]))
                emit(split);
        if (walk.size() == k)
            return;
        for (VertexId w : g.successors(last)) {
            walk.push_back(w);
            self(self);
            walk.pop_back();
        }
    };

    for_each_vertex(from, [&](VertexId s) {
        walk.assign(1, s);
        go(go);
    });
    return out;
}

Rational SimulationStats::colive_uses_mean() const
{
    if (runs == 0)
        return 0;
    return Rational(colive_uses_total, runs);
}

std::string SimulationStats::report(const Objective& o) const
{
    std::string r;
    r += "runs: " + std::to_string(runs) + "\n";
    r += "horizon: " + std::to_string(horizon) + "\n";
    r += "seed: " + std::to_string(seed) + "\n";
    r += std::string("objective: ") + to_string(o.kind) + "\n";
    r += "verdict: " + std::string(heuristic_verdict ? "heuristic" : "exact") + "\n";
    r += "satisfied: " + std::to_string(satisfied) + "/" + std::to_string(runs) + " (" +
         fixed6(runs ? static_cast<double>(satisfied) / static_cast<double>(runs) : 0) + ")\n";
    r += "colive_uses_total: " + std::to_string(colive_uses_total) + "\n";
    r += "colive_uses_mean: " + rational_report(colive_uses_mean()) + "\n";

    std::uint64_t with_use = 0, last_sum = 0, last_max = 0;
    for (std::int64_t s : colive_last_use_per_run)
        if (s >= 0) {
            ++with_use;
            last_sum += static_cast<std::uint64_t>(s);
            last_max = std::max(last_max, static_cast<std::uint64_t>(s));
        }
    r += "colive_runs_with_use: " + std::to_string(with_use) + "\n";
    if (with_use > 0) {
        r += "colive_last_use_mean: " + rational_report(Rational(last_sum, with_use)) + "\n";
        r += "colive_last_use_max: " + std::to_string(last_max) + "\n";
    }
    for (const auto& [edge, uses] : colive_edge_uses)
        r += "colive_edge " + std::to_string(edge.src) + "->" + std::to_string(edge.dst) + ": " +
             std::to_string(uses) + "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        r += "live_group " + std::to_string(i) + ": touched " +
             std::to_string(groups[i].touched) + " fired " + std::to_string(groups[i].fired);
        if (groups[i].touched > 0)
            r += " rate " + fixed6(static_cast<double>(groups[i].fired) /
                                   static_cast<double>(groups[i].touched));
        r += "\n";
    }
    return r;
}

SimulationStats monte_carlo(const StochasticGame& g, const StrategyTemplate& t,
                            const PolicyFactory& make_policy,
                            const AdversaryFactory& make_adversary, const Objective& o,
                            VertexId start, const SimulationConfig& cfg)
{
    g.require_total();
    if (cfg.horizon < g.vertex_count())
        throw SemanticError("horizon must be at least |V|");

    SimulationStats stats;
    stats.runs = cfg.runs;
    stats.horizon = cfg.horizon;
    stats.seed = cfg.seed;
    stats.heuristic_verdict = o.kind == ObjectiveKind::Buchi || o.kind == ObjectiveKind::CoBuchi ||
                              o.kind == ObjectiveKind::Parity;
    stats.groups.resize(t.live_groups.size());

    std::vector<VertexSet> group_sources;
    for (const EdgeSet& group : t.live_groups) {
        VertexSet src(g.vertex_count());
        for (const Edge& e : group)
            src.set(e.src);
        group_sources.push_back(std::move(src));
    }

    const std::size_t burn_in = cfg.horizon / 2;

    for (std::size_t run = 0; run < cfg.runs; ++run) {
        Rng rng(Rng::mix(cfg.seed, run + 1));
        auto policy = make_policy();
        auto adversary = make_adversary();

        std::vector<VertexId> visited{start};
        std::uint32_t uses = 0;
        std::int64_t last_use = -1;
        std::vector<char> fired(t.live_groups.size(), 0);

        VertexId cur = start;
        for (std::size_t i = 0; i < cfg.horizon; ++i) {
            const TranscriptStep s = step(g, *policy, *adversary, cur, rng,
                                          static_cast<std::uint32_t>(i));
            const Edge e{s.src, s.chosen};
            if (t.colive.count(e)) {
                ++uses;
                ++stats.colive_edge_uses[e];
                last_use = static_cast<std::int64_t>(i);
            }
            for (std::size_t gi = 0; gi < t.live_groups.size(); ++gi)
                if (!fired[gi] && t.live_groups[gi].count(e))
                    fired[gi] = 1;
            cur = s.chosen;
            visited.push_back(cur);
        }

        bool sat = true;
        switch (o.kind) {
        case ObjectiveKind::Safety:
            sat = std::all_of(visited.begin(), visited.end(),
                              [&](VertexId v) { return o.target.test(v); });
            break;
        case ObjectiveKind::Reachability:
            sat = std::any_of(visited.begin(), visited.end(),
                              [&](VertexId v) { return o.target.test(v); });
            break;
        case ObjectiveKind::Buchi:
            sat = std::any_of(visited.begin() + static_cast<long>(burn_in), visited.end(),
                              [&](VertexId v) { return o.target.test(v); });
            break;
        case ObjectiveKind::CoBuchi:
            sat = std::all_of(visited.begin() + static_cast<long>(burn_in), visited.end(),
                              [&](VertexId v) { return o.target.test(v); });
            break;
        case ObjectiveKind::Parity: {
            int min_p = -1;
            for (std::size_t i = burn_in; i < visited.size(); ++i) {
                const int p = o.priorities.value[visited[i]];
                if (min_p < 0 || p < min_p)
                    min_p = p;
            }
            sat = min_p % 2 == 0;
            break;
        }
        }
        if (sat)
            ++stats.satisfied;

        stats.colive_uses_total += uses;
        stats.colive_uses_per_run.push_back(uses);
        stats.colive_last_use_per_run.push_back(last_use);

        for (std::size_t gi = 0; gi < t.live_groups.size(); ++gi) {
            bool touched = false;
            for (std::size_t i = burn_in; i < visited.size() && !touched; ++i)
                touched = group_sources[gi].test(visited[i]);
            if (touched) {
                ++stats.groups[gi].touched;
                if (fired[gi])
                    ++stats.groups[gi].fired;
            }
        }
    }
    return stats;
}

} // namespace sgt
