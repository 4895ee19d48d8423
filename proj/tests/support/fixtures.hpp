#pragma once

#include "sgt/game.hpp"
#include "sgt/io.hpp"

namespace sgt::fixtures {

// Three all-Even vertices u=0, v=1, w=2 with edges u->v, v->u, v->w
// and a self-loop on w; all priorities 0.
inline ParsedGame g_ex()
{
    StochasticGame game({Owner::Even, Owner::Even, Owner::Even}, {{1}, {0, 2}, {2}});
    return {std::move(game), PriorityFunction{{0, 0, 0}}, {"u", "v", "w"}};
}

inline constexpr VertexId kU = 0;
inline constexpr VertexId kV = 1;
inline constexpr VertexId kW = 2;

// v0=0 is Random with edges to w and v1, v1=1 is Odd with an edge back
// to v0, w=2 is Even with a self-loop.
inline ParsedGame g_r(std::vector<int> priorities = {0, 0, 0})
{
    StochasticGame game({Owner::Random, Owner::Odd, Owner::Even}, {{2, 1}, {0}, {2}});
    return {std::move(game), PriorityFunction{std::move(priorities)}, {"v0", "v1", "w"}};
}

inline constexpr VertexId kV0 = 0;
inline constexpr VertexId kV1 = 1;
inline constexpr VertexId kWr = 2;

} // namespace sgt::fixtures
