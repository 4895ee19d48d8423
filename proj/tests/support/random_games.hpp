#pragma once

#include "sgt/extraction.hpp"
#include "sgt/game.hpp"

namespace sgt::testgen {

struct GameGen {
    std::size_t min_vertices = 3;
    std::size_t max_vertices = 7;
    int max_out_degree = 3;
    int max_priority = 3;
    bool deterministic = false; // no Random vertices
};

// Total game with distinct successors per vertex; degrees uniform in
// 1..max_out_degree, owners uniform over the allowed kinds.
inline StochasticGame random_game(Rng& rng, const GameGen& opt,
                                  PriorityFunction* priorities = nullptr)
{
    const std::size_t n =
        opt.min_vertices + rng.below(opt.max_vertices - opt.min_vertices + 1);
    std::vector<Owner> owners(n);
    std::vector<std::vector<VertexId>> succ(n);
    for (VertexId v = 0; v < n; ++v) {
        owners[v] = static_cast<Owner>(rng.below(opt.deterministic ? 2 : 3));
        const std::size_t degree =
            1 + rng.below(std::min<std::size_t>(opt.max_out_degree, n));
        std::vector<VertexId> pool(n);
        for (VertexId i = 0; i < n; ++i)
            pool[i] = i;
        for (std::size_t i = 0; i < degree; ++i) {
            const std::size_t j = i + rng.below(pool.size() - i);
            std::swap(pool[i], pool[j]);
            succ[v].push_back(pool[i]);
        }
    }
    if (priorities) {
        priorities->value.resize(n);
        for (auto& p : priorities->value)
            p = static_cast<int>(rng.below(opt.max_priority + 1));
    }
    return StochasticGame(std::move(owners), std::move(succ));
}

inline VertexSet random_subset(Rng& rng, std::size_t n, bool nonempty = true)
{
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v)
        if (rng.below(2))
            s.set(v);
    if (nonempty && s.none())
        s.set(static_cast<VertexId>(rng.below(n)));
    return s;
}

} // namespace sgt::testgen
