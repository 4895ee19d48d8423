#include "sgt/game.hpp"

#include <algorithm>
#include <string>

namespace sgt {

const char* to_string(Owner o)
{
    switch (o) {
    case Owner::Even: return "even";
    case Owner::Odd: return "odd";
    case Owner::Random: return "random";
    }
    return "?";
}

const char* to_string(ObjectiveKind k)
{
    switch (k) {
    case ObjectiveKind::Safety: return "safety";
    case ObjectiveKind::Reachability: return "reach";
    case ObjectiveKind::Buchi: return "buchi";
    case ObjectiveKind::CoBuchi: return "cobuchi";
    case ObjectiveKind::Parity: return "parity";
    }
    return "?";
}

StochasticGame::StochasticGame(std::vector<Owner> owners,
                               std::vector<std::vector<VertexId>> successors)
    : owners_(std::move(owners)), succ_(std::move(successors))
{
    const std::size_t n = owners_.size();
    if (succ_.size() != n)
        throw std::invalid_argument("owner and successor lists disagree on |V|");

    even_ = odd_ = random_ = dead_ = VertexSet(n);
    succ_set_.assign(n, VertexSet(n));
    for (VertexId v = 0; v < n; ++v) {
        switch (owners_[v]) {
        case Owner::Even: even_.set(v); break;
        case Owner::Odd: odd_.set(v); break;
        case Owner::Random: random_.set(v); break;
        }
        for (VertexId w : succ_[v]) {
            if (w >= n)
                throw std::invalid_argument("successor " + std::to_string(w) +
                                            " of vertex " + std::to_string(v) +
                                            " is out of range");
            if (succ_set_[v].test(w))
                throw std::invalid_argument("duplicate successor " + std::to_string(w) +
                                            " at vertex " + std::to_string(v));
            succ_set_[v].set(w);
        }
        if (succ_[v].empty())
            dead_.set(v);
        edge_count_ += succ_[v].size();
    }
}

const VertexSet& StochasticGame::vertices_of(Owner o) const
{
    switch (o) {
    case Owner::Even: return even_;
    case Owner::Odd: return odd_;
    default: return random_;
    }
}

void StochasticGame::require_total() const
{
    if (has_dead_ends())
        throw SemanticError("vertex " + std::to_string(dead_.find_first()) +
                            " has no outgoing edge");
}

std::vector<Edge> StochasticGame::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < vertex_count(); ++v)
        for (VertexId w : succ_[v])
            out.push_back({v, w});
    return out;
}

int PriorityFunction::max_priority() const
{
    int d = 0;
    for (int p : value)
        d = std::max(d, p);
    return d;
}

void PriorityFunction::validate(const StochasticGame& g) const
{
    if (value.size() != g.vertex_count())
        throw SemanticError("priority function is not total over V");
    for (int p : value)
        if (p < 0)
            throw SemanticError("negative priority");
}

void validate_lasso(const StochasticGame& g, const Lasso& l)
{
    if (l.cycle.empty())
        throw StructuralError("lasso cycle is empty");
    auto check = [&](VertexId u, VertexId v) {
        if (!g.has_edge(u, v))
            throw StructuralError("lasso step " + std::to_string(u) + "->" +
                                  std::to_string(v) + " is not a game edge");
    };
    for (std::size_t i = 0; i + 1 < l.prefix.size(); ++i)
        check(l.prefix[i], l.prefix[i + 1]);
    if (!l.prefix.empty())
        check(l.prefix.back(), l.cycle.front());
    for (std::size_t i = 0; i + 1 < l.cycle.size(); ++i)
        check(l.cycle[i], l.cycle[i + 1]);
    check(l.cycle.back(), l.cycle.front());
}

std::vector<Edge> lasso_transient_edges(const Lasso& l)
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < l.prefix.size(); ++i)
        out.push_back({l.prefix[i], l.prefix[i + 1]});
    if (!l.prefix.empty())
        out.push_back({l.prefix.back(), l.cycle.front()});
    return out;
}

std::vector<Edge> lasso_recurring_edges(const Lasso& l)
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < l.cycle.size(); ++i)
        out.push_back({l.cycle[i], l.cycle[i + 1]});
    out.push_back({l.cycle.back(), l.cycle.front()});
    return out;
}

VertexSet lasso_vertices(const Lasso& l, std::size_t capacity)
{
    VertexSet s(capacity);
    for (VertexId v : l.prefix)
        s.set(v);
    for (VertexId v : l.cycle)
        s.set(v);
    return s;
}

VertexSet lasso_cycle_vertices(const Lasso& l, std::size_t capacity)
{
    VertexSet s(capacity);
    for (VertexId v : l.cycle)
        s.set(v);
    return s;
}

bool lasso_satisfies(const StochasticGame& g, const Lasso& l, const Objective& o)
{
    validate_lasso(g, l);
    const std::size_t n = g.vertex_count();
    switch (o.kind) {
    case ObjectiveKind::Safety:
        return lasso_vertices(l, n).is_subset_of(o.target);
    case ObjectiveKind::Reachability:
        return lasso_vertices(l, n).intersects(o.target);
    case ObjectiveKind::Buchi:
        return lasso_cycle_vertices(l, n).intersects(o.target);
    case ObjectiveKind::CoBuchi:
        return lasso_cycle_vertices(l, n).is_subset_of(o.target);
    case ObjectiveKind::Parity: {
        int min_rec = -1;
        for (VertexId v : l.cycle) {
            int p = o.priorities.value[v];
            if (min_rec < 0 || p < min_rec)
                min_rec = p;
        }
        return min_rec % 2 == 0;
    }
    }
    return false;
}

Restriction restrict(const StochasticGame& g, const VertexSet& removed)
{
    const std::size_t n = g.vertex_count();
    Restriction r{StochasticGame({}, {}), {}, std::vector<std::optional<VertexId>>(n), false};

    std::vector<Owner> owners;
    std::vector<std::vector<VertexId>> succ;
    for (VertexId v = 0; v < n; ++v) {
        if (removed.test(v))
            continue;
        r.to_sub[v] = static_cast<VertexId>(r.to_original.size());
        r.to_original.push_back(v);
        owners.push_back(g.owner(v));
    }
    succ.resize(r.to_original.size());
    for (std::size_t i = 0; i < r.to_original.size(); ++i) {
        const VertexId v = r.to_original[i];
        for (VertexId w : g.successors(v))
            if (!removed.test(w))
                succ[i].push_back(*r.to_sub[w]);
        if (succ[i].empty() && !g.successors(v).empty())
            r.created_dead_end = true;
    }
    r.game = StochasticGame(std::move(owners), std::move(succ));
    return r;
}

} // namespace sgt
