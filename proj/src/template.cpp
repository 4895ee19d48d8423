#include "sgt/template.hpp"

#include <algorithm>

#include "sgt/verify.hpp"

namespace sgt {

const char* to_string(PermOrder o)
{
    switch (o) {
    case PermOrder::Equal: return "equal";
    case PermOrder::LeftLess: return "t1_less";
    case PermOrder::RightLess: return "t2_less";
    case PermOrder::Incomparable: return "incomparable";
    }
    return "?";
}

EdgeSet StrategyTemplate::all_edges() const
{
    EdgeSet out = prohibited;
    out.insert(colive.begin(), colive.end());
    for (const EdgeSet& group : live_groups)
        out.insert(group.begin(), group.end());
    return out;
}

bool semantically_equal(const StrategyTemplate& a, const StrategyTemplate& b)
{
    if (a.prohibited != b.prohibited || a.colive != b.colive)
        return false;
    auto ga = a.live_groups;
    auto gb = b.live_groups;
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    return ga == gb;
}

void validate_template(const StochasticGame& g, const StrategyTemplate& t)
{
    for (const Edge& e : t.all_edges()) {
        if (!g.has_edge(e.src, e.dst))
            throw SemanticError("template edge " + std::to_string(e.src) + "->" +
                                std::to_string(e.dst) + " is not a game edge");
        if (!g.is_even(e.src))
            throw SemanticError("template edge " + std::to_string(e.src) + "->" +
                                std::to_string(e.dst) + " does not start at an Even vertex");
    }
    for (const EdgeSet& group : t.live_groups)
        if (group.empty())
            throw SemanticError("empty live-group");
}

EdgeSet prohibited_colive_overlap(const StrategyTemplate& t)
{
    EdgeSet out;
    std::set_intersection(t.prohibited.begin(), t.prohibited.end(), t.colive.begin(),
                          t.colive.end(), std::inserter(out, out.begin()));
    return out;
}

TemplateSize size(const StrategyTemplate& t)
{
    TemplateSize s{0, t.prohibited.size(), 0, t.colive.size()};
    for (const EdgeSet& group : t.live_groups)
        s.live += group.size();
    s.overall = s.prohibited + s.live + s.colive;
    return s;
}

bool lasso_satisfies_template(const StochasticGame& g, const Lasso& l, const StrategyTemplate& t)
{
    validate_lasso(g, l);

    const auto transient = lasso_transient_edges(l);
    const auto recurring = lasso_recurring_edges(l);

    for (const Edge& e : transient)
        if (t.prohibited.count(e))
            return false;
    for (const Edge& e : recurring)
        if (t.prohibited.count(e) || t.colive.count(e))
            return false;

    const VertexSet recur_vertices = lasso_cycle_vertices(l, g.vertex_count());
    for (const EdgeSet& group : t.live_groups) {
        bool triggered = false;
        for (const Edge& e : group)
            if (recur_vertices.test(e.src)) {
                triggered = true;
                break;
            }
        if (!triggered)
            continue;
        bool discharged = false;
        for (const Edge& e : recurring)
            if (group.count(e)) {
                discharged = true;
                break;
            }
        if (!discharged)
            return false;
    }
    return true;
}

CombineResult combine(const StochasticGame& g, const StrategyTemplate& a,
                      const StrategyTemplate& b, const VertexSet* winning)
{
    StrategyTemplate merged;
    merged.prohibited = a.prohibited;
    merged.prohibited.insert(b.prohibited.begin(), b.prohibited.end());
    merged.colive = a.colive;
    merged.colive.insert(b.colive.begin(), b.colive.end());
    merged.live_groups = a.live_groups;
    for (const EdgeSet& group : b.live_groups)
        if (std::find(merged.live_groups.begin(), merged.live_groups.end(), group) ==
            merged.live_groups.end())
            merged.live_groups.push_back(group);

    // (a) a live-group whose mandatory recurring edges can no longer recur
    EdgeSet blocked = merged.prohibited;
    blocked.insert(merged.colive.begin(), merged.colive.end());
    for (const EdgeSet& group : merged.live_groups) {
        bool usable = false;
        for (const Edge& e : group)
            if (!blocked.count(e)) {
                usable = true;
                break;
            }
        if (!usable)
            return Conflict{"live-group has no edge left outside prohibited/co-live", group, {}};
    }

    // (b) an Even vertex left without any permitted move
    VertexSet scope = winning ? (*winning & g.vertices_of(Owner::Even))
                              : g.vertices_of(Owner::Even);
    std::optional<VertexId> stuck;
    for_each_vertex(scope, [&](VertexId v) {
        if (stuck)
            return;
        for (VertexId w : g.successors(v))
            if (!merged.prohibited.count({v, w}))
                return;
        if (!g.successors(v).empty())
            stuck = v;
    });
    if (stuck)
        return Conflict{"vertex " + std::to_string(*stuck) +
                            " has every outgoing edge prohibited",
                        {}, stuck};

    return merged;
}

bool superset_implies_less_permissive(const StrategyTemplate& a, const StrategyTemplate& b)
{
    if (!std::includes(a.prohibited.begin(), a.prohibited.end(), b.prohibited.begin(),
                       b.prohibited.end()))
        return false;
    if (!std::includes(a.colive.begin(), a.colive.end(), b.colive.begin(), b.colive.end()))
        return false;
    for (const EdgeSet& group : b.live_groups)
        if (std::find(a.live_groups.begin(), a.live_groups.end(), group) == a.live_groups.end())
            return false;
    return true;
}

PermOrder compare_permissiveness_bounded(const StochasticGame& g, const StrategyTemplate& t1,
                                         const StrategyTemplate& t2, const VertexSet& from,
                                         std::size_t k, std::uint64_t budget)
{
    bool left_in_right = true;  // sat(t1) subseteq sat(t2)
    bool right_in_left = true;
    for (const Lasso& l : enumerate_lassos(g, from, k, budget)) {
        const bool s1 = lasso_satisfies_template(g, l, t1);
        const bool s2 = lasso_satisfies_template(g, l, t2);
        if (s1 && !s2)
            left_in_right = false;
        if (s2 && !s1)
            right_in_left = false;
        if (!left_in_right && !right_in_left)
            return PermOrder::Incomparable;
    }
    if (left_in_right && right_in_left)
        return PermOrder::Equal;
    return left_in_right ? PermOrder::LeftLess : PermOrder::RightLess;
}

} // namespace sgt
