#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgt/fixpoint.hpp"
#include "support/fixtures.hpp"
#include "support/random_games.hpp"

using namespace sgt;
using namespace sgt::fixtures;

namespace {
const ParsedGame ex = g_ex();
const ParsedGame gr = g_r();
const StochasticGame& G = ex.game;
const StochasticGame& R = gr.game;
} // namespace

TEST_CASE("pre")
{
    CHECK(pre(G, full_set(3)) == full_set(3));
    CHECK(pre(G, VertexSet(3)) == VertexSet(3));
    CHECK(pre(G, make_set(3, {kV})) == make_set(3, {kU}));
}

TEST_CASE("pre_even / pre_odd")
{
    CHECK(pre_even(G, make_set(3, {kW})) == make_set(3, {kV, kW}));
    CHECK(pre_even(G, VertexSet(3)) == VertexSet(3));
    CHECK(pre_odd(G, make_set(3, {kV})) == VertexSet(3)); // no Odd vertices
    CHECK(pre_odd(R, make_set(3, {kV0})) == make_set(3, {kV1}));
}

TEST_CASE("pre_random")
{
    CHECK(pre_random(R, make_set(3, {kWr, kV1}), make_set(3, {kWr})) == make_set(3, {kV0}));
    CHECK(pre_random(R, full_set(3), VertexSet(3)) == VertexSet(3));
    CHECK(pre_random(G, full_set(3), full_set(3)) == VertexSet(3)); // no Random vertices
}

TEST_CASE("attractors on the running example")
{
    CHECK(attr(G, VertexSet(3)) == VertexSet(3));
    CHECK(attr_even(G, make_set(3, {kW})) == full_set(3));
    CHECK(attr(G, make_set(3, {kW})) == make_set(3, {kW}));
}

TEST_CASE("attr_prime")
{
    CHECK(attr_prime(G, make_set(3, {kW})) == make_set(3, {kW}));
    CHECK(attr_prime(R, make_set(3, {kWr})) == full_set(3));
    CHECK(attr_prime(G, full_set(3)) == full_set(3));
    CHECK(attr_prime(R, full_set(3)) == full_set(3));
}

TEST_CASE("attr_prime_even")
{
    CHECK(attr_prime_even(G, make_set(3, {kW})) == full_set(3));
    CHECK(attr_prime_even(G, VertexSet(3)) == VertexSet(3));
    CHECK(attr_prime_even(R, VertexSet(3)) == VertexSet(3));
    CHECK(attr_prime_even(R, make_set(3, {kWr})) == full_set(3));
}

TEST_CASE("buchi winning set")
{
    CHECK(buchi_winning_set(G, make_set(3, {kW})) == full_set(3));
    CHECK(buchi_winning_set(G, full_set(3)) == full_set(3));
    CHECK(buchi_winning_set(R, full_set(3)) == full_set(3));
    // Even can cycle u<->v forever; w only has its self-loop
    CHECK(buchi_winning_set(G, make_set(3, {kU})) == make_set(3, {kU, kV}));
}

TEST_CASE("buchi winning set is total on single-vertex games of any owner")
{
    for (Owner o : {Owner::Even, Owner::Odd, Owner::Random}) {
        StochasticGame g({o}, {{0}});
        CHECK(buchi_winning_set(g, full_set(1)) == full_set(1));
    }
}

TEST_CASE("monotonicity and containment chains on random games")
{
    Rng rng(11);
    for (int round = 0; round < 60; ++round) {
        const auto g = testgen::random_game(rng, {});
        const std::size_t n = g.vertex_count();
        VertexSet x = testgen::random_subset(rng, n, false);
        VertexSet larger = x | testgen::random_subset(rng, n, false);

        CHECK(pre(g, x).is_subset_of(pre(g, larger)));
        CHECK(attr(g, x).is_subset_of(attr(g, larger)));
        CHECK(attr_prime_even(g, x).is_subset_of(attr_prime_even(g, larger)));

        CHECK(x.is_subset_of(attr(g, x)));
        CHECK(attr(g, x).is_subset_of(attr_even(g, x)));
        CHECK(attr_prime(g, x).is_subset_of(attr_prime_even(g, x)));
    }
}

TEST_CASE("kleene iterates are monotone and within |V| steps")
{
    Rng rng(12);
    for (int round = 0; round < 30; ++round) {
        const auto g = testgen::random_game(rng, {});
        const std::size_t n = g.vertex_count();
        const VertexSet x = testgen::random_subset(rng, n);

        FixpointTrace mu;
        attr_even(g, x, &mu);
        CHECK(mu.iterates.size() <= n + 1);
        for (std::size_t i = 1; i < mu.iterates.size(); ++i)
            CHECK(mu.iterates[i - 1].is_subset_of(mu.iterates[i]));

        FixpointTrace nu;
        attr_prime_even(g, x, &nu);
        CHECK(nu.iterates.size() <= n + 1);
        for (std::size_t i = 1; i < nu.iterates.size(); ++i)
            CHECK(nu.iterates[i].is_subset_of(nu.iterates[i - 1]));
    }
}
