#include "sgt/synthesis.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "sgt/fixpoint.hpp"

namespace sgt {

namespace {

EdgeSet edges_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& from,
                      const VertexSet& to)
{
    EdgeSet out;
    for_each_vertex(from & active & g.vertices_of(Owner::Even), [&](VertexId u) {
        for (VertexId w : g.successors(u))
            if (active.test(w) && to.test(w))
                out.insert({u, w});
    });
    return out;
}

void append_groups(std::vector<EdgeSet>& dst, const std::vector<EdgeSet>& src)
{
    for (const EdgeSet& group : src)
        if (std::find(dst.begin(), dst.end(), group) == dst.end())
            dst.push_back(group);
}

// nuY.(X n (Pre_Even(Y) u Pre(Y))): Even's winning set for staying in X.
VertexSet safety_winning_set_in(const StochasticGame& g, const VertexSet& active,
                                const VertexSet& x)
{
    VertexSet y = active;
    while (true) {
        VertexSet next = (x & active) & (pre_even_in(g, active, y) | pre_in(g, active, y));
        if (next == y)
            return y;
        y = std::move(next);
    }
}

#ifndef NDEBUG
bool subgame_is_total(const StochasticGame& g, const VertexSet& active)
{
    bool ok = true;
    for_each_vertex(active, [&](VertexId v) {
        if (!g.successor_set(v).intersects(active))
            ok = false;
    });
    return ok;
}
#endif

std::pair<int, VertexSet> min_priority_vertices(const StochasticGame& g,
                                                const PriorityFunction& p,
                                                const VertexSet& active)
{
    int best = std::numeric_limits<int>::max();
    for_each_vertex(active, [&](VertexId v) { best = std::min(best, p.value[v]); });
    VertexSet x(g.vertex_count());
    for_each_vertex(active, [&](VertexId v) {
        if (p.value[v] == best)
            x.set(v);
    });
    return {best, x};
}

Partition zielonka_rec(const StochasticGame& g, const PriorityFunction& p,
                       const VertexSet& active)
{
    const std::size_t n = g.vertex_count();
    if (active.none())
        return {VertexSet(n), VertexSet(n)};
    assert(subgame_is_total(g, active));

    auto [x, min_set] = min_priority_vertices(g, p, active);
    if (x % 2 == 0) {
        VertexSet a = attr_even_in(g, active, min_set);
        Partition sub = zielonka_rec(g, p, active - a);
        if (sub.odd_winning.none())
            return {active, VertexSet(n)};
        VertexSet b = attr_odd_in(g, active, sub.odd_winning);
        Partition sub2 = zielonka_rec(g, p, active - b);
        return {sub2.even_winning, sub2.odd_winning | b};
    }
    VertexSet a = attr_odd_in(g, active, min_set);
    Partition sub = zielonka_rec(g, p, active - a);
    if (sub.even_winning.none())
        return {VertexSet(n), active};
    VertexSet b = attr_even_in(g, active, sub.even_winning);
    Partition sub2 = zielonka_rec(g, p, active - b);
    return {sub2.even_winning | b, sub2.odd_winning};
}

DetTemplateResult det_template_rec(const StochasticGame& g, const PriorityFunction& p,
                                   const VertexSet& active)
{
    const std::size_t n = g.vertex_count();
    if (active.none())
        return {VertexSet(n), VertexSet(n), {}, {}};
    assert(subgame_is_total(g, active));

    auto [x, min_set] = min_priority_vertices(g, p, active);
    if (x % 2 == 0) {
        VertexSet a = attr_even_in(g, active, min_set);
        if (a == active)
            return {active, VertexSet(n), live_groups_in(g, active, min_set), {}};
        DetTemplateResult r1 = det_template_rec(g, p, active - a);
        if (r1.odd_winning.none()) {
            std::vector<EdgeSet> groups = r1.live_groups;
            append_groups(groups, live_groups_in(g, active, min_set));
            return {active, VertexSet(n), std::move(groups), r1.colive};
        }
        VertexSet b = attr_odd_in(g, active, r1.odd_winning);
        DetTemplateResult r2 = det_template_rec(g, p, active - b);
        return {r2.even_winning, r2.odd_winning | b, r2.live_groups, r2.colive};
    }
    VertexSet a = attr_odd_in(g, active, min_set);
    if (a == active)
        return {VertexSet(n), active, {}, {}};
    DetTemplateResult r1 = det_template_rec(g, p, active - a);
    if (r1.even_winning.none())
        return {VertexSet(n), active, {}, {}};
    std::vector<EdgeSet> groups = r1.live_groups;
    append_groups(groups, live_groups_in(g, active, r1.even_winning));
    EdgeSet colive = r1.colive;
    EdgeSet leaving = edges_even_in(g, active, r1.even_winning, active - r1.even_winning);
    colive.insert(leaving.begin(), leaving.end());
    VertexSet b = attr_even_in(g, active, r1.even_winning);
    DetTemplateResult r2 = det_template_rec(g, p, active - b);
    append_groups(groups, r2.live_groups);
    colive.insert(r2.colive.begin(), r2.colive.end());
    return {r2.even_winning | b, r2.odd_winning, std::move(groups), std::move(colive)};
}

void require_deterministic(const StochasticGame& g)
{
    if (g.vertices_of(Owner::Random).any())
        throw SemanticError("algorithm requires a deterministic game (no Random vertices)");
}

} // namespace

EdgeSet edges_even(const StochasticGame& g, const VertexSet& from, const VertexSet& to)
{
    return edges_even_in(g, g.all_vertices(), from, to);
}

std::vector<EdgeSet> live_groups_in(const StochasticGame& g, const VertexSet& active,
                                    const VertexSet& x)
{
    std::vector<EdgeSet> out;
    VertexSet cur = x & active;
    for (std::size_t iter = 0;; ++iter) {
        assert(iter <= g.vertex_count() + 1);
        (void)iter;
        VertexSet a = attr_prime_in(g, active, cur);
        VertexSet next = a | pre_even_in(g, active, a);
        if (next == a)
            return out;
        out.push_back(edges_even_in(g, active, next - a, a));
        cur = std::move(next);
    }
}

std::vector<EdgeSet> live_groups(const StochasticGame& g, const VertexSet& x)
{
    return live_groups_in(g, g.all_vertices(), x);
}

SynthesisResult safety_template(const StochasticGame& g, const VertexSet& x)
{
    g.require_total();
    VertexSet w = safety_winning_set_in(g, g.all_vertices(), x);
    StrategyTemplate t;
    t.prohibited = edges_even(g, w, g.all_vertices() - w);
    return {std::move(w), std::move(t)};
}

SynthesisResult reachability_template(const StochasticGame& g, const VertexSet& x)
{
    g.require_total();
    VertexSet a = attr_prime(g, x);
    VertexSet w = attr_prime_even(g, a);
    StrategyTemplate t;
    t.prohibited = edges_even(g, w, g.all_vertices() - w);
    t.colive = edges_even(g, w - a, w - a);
    return {std::move(w), std::move(t)};
}

SynthesisResult buchi_template(const StochasticGame& g, const VertexSet& x)
{
    g.require_total();
    VertexSet w = buchi_winning_set(g, x);
    StrategyTemplate t;
    t.prohibited = edges_even(g, w, g.all_vertices() - w);
    t.live_groups = live_groups(g, x & w);
    return {std::move(w), std::move(t)};
}

SynthesisResult cobuchi_template(const StochasticGame& g, const VertexSet& x)
{
    g.require_total();
    VertexSet core = safety_winning_set_in(g, g.all_vertices(), x);
    VertexSet a = attr_prime(g, core);
    VertexSet w = attr_prime_even(g, a);
    StrategyTemplate t;
    t.prohibited = edges_even(g, w, g.all_vertices() - w);
    t.colive = edges_even(g, core, w - core);
    EdgeSet stall = edges_even(g, w - a, w - a);
    t.colive.insert(stall.begin(), stall.end());
    return {std::move(w), std::move(t)};
}

ReducedGame reduce(const StochasticGame& g, const PriorityFunction& p)
{
    p.validate(g);
    const std::size_t n = g.vertex_count();

    std::vector<Owner> owners;
    std::vector<int> priorities;
    std::vector<std::optional<VertexId>> to_original;
    std::vector<VertexId> to_reduced(n);

    // Originals keep their ids; Random roots flip to Odd.
    for (VertexId v = 0; v < n; ++v) {
        owners.push_back(g.owner(v) == Owner::Random ? Owner::Odd : g.owner(v));
        priorities.push_back(p.value[v]);
        to_original.emplace_back(v);
        to_reduced[v] = v;
    }

    std::vector<std::vector<VertexId>> succ(n);
    for (VertexId v = 0; v < n; ++v) {
        if (g.owner(v) != Owner::Random) {
            succ[v] = g.successors(v);
            continue;
        }
        const int pv = p.value[v];
        const int children = pv / 2 + (pv % 2) + 1; // ceil(pv/2) + 1
        const VertexId child_base = static_cast<VertexId>(owners.size());
        for (int i = 0; i < children; ++i) {
            owners.push_back(Owner::Even);
            priorities.push_back(pv);
            to_original.emplace_back(std::nullopt);
            succ[v].push_back(child_base + static_cast<VertexId>(i));
        }
        const VertexId grand_base = child_base + static_cast<VertexId>(children);
        succ.resize(owners.size() + static_cast<std::size_t>(pv) + 1);
        for (int j = 0; j <= pv; ++j) {
            owners.push_back(j % 2 == 0 ? Owner::Odd : Owner::Even);
            priorities.push_back(j);
            to_original.emplace_back(std::nullopt);
            const VertexId grand = grand_base + static_cast<VertexId>(j);
            const int child = (j + 1) / 2; // ceil(j/2)
            succ[child_base + static_cast<VertexId>(child)].push_back(grand);
            succ[grand] = g.successors(v); // inherit all original out-edges
        }
    }

    return {StochasticGame(std::move(owners), std::move(succ)),
            PriorityFunction{std::move(priorities)}, std::move(to_original),
            std::move(to_reduced)};
}

Partition zielonka_solve(const StochasticGame& g, const PriorityFunction& p)
{
    require_deterministic(g);
    g.require_total();
    p.validate(g);
    return zielonka_rec(g, p, g.all_vertices());
}

DetTemplateResult det_parity_template(const StochasticGame& g, const PriorityFunction& p)
{
    require_deterministic(g);
    g.require_total();
    p.validate(g);
    return det_template_rec(g, p, g.all_vertices());
}

SynthesisResult parity_template(const StochasticGame& g, const PriorityFunction& p)
{
    g.require_total();
    p.validate(g);
    const std::size_t n = g.vertex_count();

    ReducedGame rg = reduce(g, p);
    DetTemplateResult det = det_parity_template(rg.game, rg.priorities);

    // Keep only edges whose source survives the gadgets.  Originals keep
    // their ids in the reduction, so an edge is original iff both
    // endpoints are below |V|.
    auto original_edge = [&](const Edge& e) { return e.src < n && e.dst < n; };

    StrategyTemplate t;
    EdgeSet leaving = edges_even(rg.game, det.even_winning, det.odd_winning);
    for (const Edge& e : leaving)
        if (original_edge(e))
            t.prohibited.insert(e);
    for (const EdgeSet& group : det.live_groups) {
        EdgeSet mapped;
        for (const Edge& e : group)
            if (original_edge(e))
                mapped.insert(e);
        if (mapped.empty())
            continue; // gadget-only group; a vacuous obligation would weaken nothing
        if (std::find(t.live_groups.begin(), t.live_groups.end(), mapped) ==
            t.live_groups.end())
            t.live_groups.push_back(std::move(mapped));
    }
    for (const Edge& e : det.colive)
        if (original_edge(e))
            t.colive.insert(e);

    VertexSet w(n);
    for (VertexId v = 0; v < n; ++v)
        if (det.even_winning.test(v))
            w.set(v);
    return {std::move(w), std::move(t)};
}

SynthesisResult synthesize(const StochasticGame& g, const Objective& o)
{
    switch (o.kind) {
    case ObjectiveKind::Safety: return safety_template(g, o.target);
    case ObjectiveKind::Reachability: return reachability_template(g, o.target);
    case ObjectiveKind::Buchi: return buchi_template(g, o.target);
    case ObjectiveKind::CoBuchi: return cobuchi_template(g, o.target);
    case ObjectiveKind::Parity: return parity_template(g, o.priorities);
    }
    throw std::logic_error("unknown objective");
}

} // namespace sgt
