#include "sgt/fixpoint.hpp"

#include <cassert>

namespace sgt {

namespace {

// Kleene iteration drivers.  Every operator below is monotone, so the
// mu driver's iterates grow and the nu driver's shrink; both reach the
// fixpoint in at most |active|+1 rounds.

template <typename Step>
VertexSet least_fixpoint(std::size_t n, Step step, FixpointTrace* trace)
{
    VertexSet y(n);
    for (std::size_t round = 0;; ++round) {
        assert(round <= n + 1);
        (void)round;
        VertexSet next = step(y);
        if (trace)
            trace->iterates.push_back(next);
        if (next == y)
            return y;
        y = std::move(next);
    }
}

template <typename Step>
VertexSet greatest_fixpoint(const VertexSet& top, Step step, FixpointTrace* trace)
{
    VertexSet z = top;
    for (std::size_t round = 0;; ++round) {
        assert(round <= top.size() + 1);
        (void)round;
        VertexSet next = step(z);
        if (trace)
            trace->iterates.push_back(next);
        if (next == z)
            return z;
        z = std::move(next);
    }
}

} // namespace

VertexSet pre_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x)
{
    VertexSet out(g.vertex_count());
    for_each_vertex(active, [&](VertexId u) {
        VertexSet s = g.successor_set(u) & active;
        if (s.any() && s.is_subset_of(x))
            out.set(u);
    });
    return out;
}

VertexSet pre_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x)
{
    VertexSet out(g.vertex_count());
    for_each_vertex(active & g.vertices_of(Owner::Even), [&](VertexId u) {
        if (g.successor_set(u).intersects(x & active))
            out.set(u);
    });
    return out;
}

VertexSet pre_odd_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x)
{
    VertexSet out(g.vertex_count());
    for_each_vertex(active & g.vertices_of(Owner::Odd), [&](VertexId u) {
        if (g.successor_set(u).intersects(x & active))
            out.set(u);
    });
    return out;
}

VertexSet pre_random_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x_all,
                        const VertexSet& x_some)
{
    VertexSet out(g.vertex_count());
    for_each_vertex(active & g.vertices_of(Owner::Random), [&](VertexId u) {
        VertexSet s = g.successor_set(u) & active;
        if (s.any() && s.is_subset_of(x_all) && s.intersects(x_some))
            out.set(u);
    });
    return out;
}

VertexSet pre(const StochasticGame& g, const VertexSet& x)
{
    return pre_in(g, g.all_vertices(), x);
}

VertexSet pre_even(const StochasticGame& g, const VertexSet& x)
{
    return pre_even_in(g, g.all_vertices(), x);
}

VertexSet pre_odd(const StochasticGame& g, const VertexSet& x)
{
    return pre_odd_in(g, g.all_vertices(), x);
}

VertexSet pre_random(const StochasticGame& g, const VertexSet& x_all, const VertexSet& x_some)
{
    return pre_random_in(g, g.all_vertices(), x_all, x_some);
}

VertexSet attr_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                  FixpointTrace* trace)
{
    const VertexSet target = x & active;
    return least_fixpoint(
        g.vertex_count(), [&](const VertexSet& y) { return target | pre_in(g, active, y); },
        trace);
}

VertexSet attr_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                       FixpointTrace* trace)
{
    const VertexSet target = x & active;
    return least_fixpoint(
        g.vertex_count(),
        [&](const VertexSet& y) {
            return target | pre_in(g, active, y) | pre_even_in(g, active, y);
        },
        trace);
}

VertexSet attr_odd_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                      FixpointTrace* trace)
{
    const VertexSet target = x & active;
    return least_fixpoint(
        g.vertex_count(),
        [&](const VertexSet& y) {
            return target | pre_in(g, active, y) | pre_odd_in(g, active, y);
        },
        trace);
}

VertexSet attr_prime_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                        FixpointTrace* trace)
{
    const VertexSet target = x & active;
    return greatest_fixpoint(
        active,
        [&](const VertexSet& z) {
            return least_fixpoint(
                g.vertex_count(),
                [&](const VertexSet& y) {
                    return target | pre_in(g, active, y) | pre_random_in(g, active, z, y);
                },
                nullptr);
        },
        trace);
}

VertexSet attr_prime_even_in(const StochasticGame& g, const VertexSet& active, const VertexSet& x,
                             FixpointTrace* trace)
{
    const VertexSet target = x & active;
    return greatest_fixpoint(
        active,
        [&](const VertexSet& z) {
            return least_fixpoint(
                g.vertex_count(),
                [&](const VertexSet& y) {
                    return target | pre_even_in(g, active, y) | pre_in(g, active, y) |
                           pre_random_in(g, active, z, y);
                },
                nullptr);
        },
        trace);
}

VertexSet buchi_winning_set_in(const StochasticGame& g, const VertexSet& active,
                               const VertexSet& x, FixpointTrace* trace)
{
    const VertexSet target = x & active;
    return greatest_fixpoint(
        active,
        [&](const VertexSet& z) {
            VertexSet kernel = target & (pre_even_in(g, active, z) | pre_in(g, active, z));
            return least_fixpoint(
                g.vertex_count(),
                [&](const VertexSet& y) {
                    return kernel | pre_even_in(g, active, y) | pre_in(g, active, y) |
                           pre_random_in(g, active, z, y);
                },
                nullptr);
        },
        trace);
}

VertexSet attr(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace)
{
    return attr_in(g, g.all_vertices(), x, trace);
}

VertexSet attr_even(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace)
{
    return attr_even_in(g, g.all_vertices(), x, trace);
}

VertexSet attr_odd(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace)
{
    return attr_odd_in(g, g.all_vertices(), x, trace);
}

VertexSet attr_prime(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace)
{
    return attr_prime_in(g, g.all_vertices(), x, trace);
}

VertexSet attr_prime_even(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace)
{
    return attr_prime_even_in(g, g.all_vertices(), x, trace);
}

VertexSet buchi_winning_set(const StochasticGame& g, const VertexSet& x, FixpointTrace* trace)
{
    return buchi_winning_set_in(g, g.all_vertices(), x, trace);
}

} // namespace sgt
