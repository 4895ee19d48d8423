#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sgt/synthesis.hpp"
#include "sgt/verify.hpp"
#include "support/fixtures.hpp"
#include "support/random_games.hpp"

using namespace sgt;
using namespace sgt::fixtures;

namespace {
const ParsedGame ex = g_ex();
const ParsedGame gr = g_r();
const StochasticGame& G = ex.game;
const StochasticGame& R = gr.game;

Objective objective_for(ObjectiveKind kind, const VertexSet& target,
                        const PriorityFunction& prio)
{
    if (kind == ObjectiveKind::Parity)
        return Objective::parity(prio);
    return {kind, target, {}};
}
} // namespace

TEST_CASE("safety templates")
{
    auto all = safety_template(G, full_set(3));
    CHECK(all.winning_set == full_set(3));
    CHECK(all.tpl.prohibited.empty());

    auto uv = safety_template(G, make_set(3, {kU, kV}));
    CHECK(uv.winning_set == make_set(3, {kU, kV}));
    CHECK(uv.tpl.prohibited == EdgeSet{{kV, kW}});
    CHECK(uv.tpl.live_groups.empty());
    CHECK(uv.tpl.colive.empty());

    auto rr = safety_template(R, make_set(3, {kV0, kV1}));
    CHECK(rr.winning_set == VertexSet(3));
    CHECK(rr.winning_set == oracle_winning_set(R, Objective::safety(make_set(3, {kV0, kV1}))));
}

TEST_CASE("reachability template reproduces T1")
{
    auto res = reachability_template(G, make_set(3, {kW}));
    CHECK(res.winning_set == full_set(3));
    CHECK(res.tpl.prohibited.empty());
    CHECK(res.tpl.live_groups.empty());
    CHECK(res.tpl.colive == EdgeSet{{kU, kV}, {kV, kU}});

    auto trivial = reachability_template(G, full_set(3));
    CHECK(trivial.winning_set == full_set(3));
    CHECK(trivial.tpl.colive.empty());
    CHECK(trivial.tpl.prohibited.empty());

    auto rr = reachability_template(R, make_set(3, {kWr}));
    CHECK(rr.winning_set == full_set(3));
    CHECK(rr.tpl.colive.empty());
    CHECK(rr.winning_set == oracle_winning_set(R, Objective::reachability(make_set(3, {kWr}))));
}

TEST_CASE("live groups")
{
    CHECK(live_groups(G, full_set(3)).empty());

    // literal trace of the iteration: u is forced into {v,w} by Pre, so
    // only one group arises before X = A
    const auto groups_w = live_groups(G, make_set(3, {kW}));
    REQUIRE(groups_w.size() == 1);
    CHECK(groups_w[0] == EdgeSet{{kV, kW}});

    // a target absorbing everything via Random vertices needs no groups
    const auto groups_r = live_groups(R, make_set(3, {kWr}));
    CHECK(groups_r.empty());
}

TEST_CASE("buchi templates")
{
    auto to_u = buchi_template(G, make_set(3, {kU}));
    CHECK(to_u.winning_set == make_set(3, {kU, kV}));
    CHECK(to_u.tpl.prohibited == EdgeSet{{kV, kW}});
    REQUIRE(to_u.tpl.live_groups.size() == 1);
    CHECK(to_u.tpl.live_groups[0] == EdgeSet{{kV, kU}});
    CHECK(to_u.winning_set == oracle_winning_set(G, Objective::buchi(make_set(3, {kU}))));

    auto everything = buchi_template(G, full_set(3));
    CHECK(everything.winning_set == full_set(3));
    CHECK(everything.tpl.live_groups.empty());

    auto to_w = buchi_template(G, make_set(3, {kW}));
    CHECK(to_w.winning_set == full_set(3));
    REQUIRE(to_w.tpl.live_groups.size() == 1);
    CHECK(to_w.tpl.live_groups[0] == EdgeSet{{kV, kW}});
}

TEST_CASE("cobuchi templates")
{
    auto all = cobuchi_template(G, full_set(3));
    CHECK(all.winning_set == full_set(3));
    CHECK(all.tpl.colive.empty());

    auto to_w = cobuchi_template(G, make_set(3, {kW}));
    CHECK(to_w.winning_set == full_set(3));
    CHECK(to_w.tpl.colive == EdgeSet{{kU, kV}, {kV, kU}});
    CHECK(to_w.winning_set == oracle_winning_set(G, Objective::cobuchi(make_set(3, {kW}))));

    auto stay_uv = cobuchi_template(G, make_set(3, {kU, kV}));
    CHECK(stay_uv.winning_set == make_set(3, {kU, kV}));
    CHECK(stay_uv.tpl.prohibited == EdgeSet{{kV, kW}});
    CHECK(stay_uv.tpl.colive.empty());
    CHECK(stay_uv.winning_set ==
          oracle_winning_set(G, Objective::cobuchi(make_set(3, {kU, kV}))));
}

TEST_CASE("gadget reduction: counts, priorities, owners")
{
    // single Random vertex with a self-loop, priority 0
    {
        StochasticGame g({Owner::Random}, {{0}});
        auto rg = reduce(g, PriorityFunction{{0}});
        CHECK(rg.game.vertex_count() == 3); // root + 1 child + 1 grandchild
        CHECK(rg.game.owner(0) == Owner::Odd);
        CHECK(rg.game.owner(1) == Owner::Even);  // child
        CHECK(rg.game.owner(2) == Owner::Odd);   // grandchild j=0
        CHECK(rg.priorities.value == std::vector<int>{0, 0, 0});
        CHECK(rg.game.has_edge(0, 1));
        CHECK(rg.game.has_edge(1, 2));
        CHECK(rg.game.has_edge(2, 0)); // inherited self-loop
        CHECK(!rg.to_original[1].has_value());
        CHECK(*rg.to_original[0] == 0);
    }

    // priority 3: 1 + 3 + 4 = 8 vertices replace the Random vertex
    {
        StochasticGame g({Owner::Random}, {{0}});
        auto rg = reduce(g, PriorityFunction{{3}});
        CHECK(rg.game.vertex_count() == 8);
        // grandchildren are the last four, priorities 0..3, owner alternating
        std::vector<int> grand_prios;
        for (VertexId v = 4; v < 8; ++v)
            grand_prios.push_back(rg.priorities.value[v]);
        CHECK(grand_prios == std::vector<int>{0, 1, 2, 3});
        CHECK(rg.game.owner(4) == Owner::Odd);
        CHECK(rg.game.owner(5) == Owner::Even);
        CHECK(rg.game.owner(6) == Owner::Odd);
        CHECK(rg.game.owner(7) == Owner::Even);
        // children 1..3 carry the original priority and connect per ceil(j/2)
        for (VertexId c = 1; c <= 3; ++c)
            CHECK(rg.priorities.value[c] == 3);
        CHECK(rg.game.has_edge(1, 4)); // j=0 -> child 0
        CHECK(rg.game.has_edge(2, 5)); // j=1 -> child 1
        CHECK(rg.game.has_edge(2, 6)); // j=2 -> child 1
        CHECK(rg.game.has_edge(3, 7)); // j=3 -> child 2
    }

    // deterministic input: output isomorphic (identical ids here)
    {
        const auto det = StochasticGame({Owner::Even, Owner::Odd}, {{1}, {0, 1}});
        auto rg = reduce(det, PriorityFunction{{1, 2}});
        CHECK(rg.game == det);
        CHECK(rg.priorities.value == std::vector<int>{1, 2});
    }
}

TEST_CASE("gadget accounting on random games")
{
    Rng rng(31);
    for (int round = 0; round < 50; ++round) {
        PriorityFunction p;
        const auto g = testgen::random_game(rng, {}, &p);
        const auto rg = reduce(g, p);

        std::size_t expected = g.vertex_count();
        for_each_vertex(g.vertices_of(Owner::Random), [&](VertexId v) {
            const int pv = p.value[v];
            expected += static_cast<std::size_t>(2 + (pv + 1) / 2 + pv + 1) - 1;
        });
        CHECK(rg.game.vertex_count() == expected);
        CHECK(rg.game.vertices_of(Owner::Random).none());
        rg.game.require_total();

        // original vertices keep owner (Random -> Odd), priority, and edges
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(rg.priorities.value[v] == p.value[v]);
            if (g.owner(v) != Owner::Random) {
                CHECK(rg.game.owner(v) == g.owner(v));
                CHECK(rg.game.successors(v) == g.successors(v));
            } else {
                CHECK(rg.game.owner(v) == Owner::Odd);
            }
        }
    }
}

TEST_CASE("zielonka on one-vertex games")
{
    StochasticGame loop({Owner::Even}, {{0}});
    CHECK(zielonka_solve(loop, PriorityFunction{{0}}).even_winning == full_set(1));
    CHECK(zielonka_solve(loop, PriorityFunction{{1}}).odd_winning == full_set(1));
}

TEST_CASE("zielonka rejects stochastic games")
{
    CHECK_THROWS_AS(zielonka_solve(R, PriorityFunction{{0, 0, 0}}), SemanticError);
}

TEST_CASE("zielonka partitions and matches the deterministic oracle")
{
    Rng rng(37);
    for (int round = 0; round < 60; ++round) {
        PriorityFunction p;
        const auto g = testgen::random_game(rng, {.deterministic = true}, &p);
        const auto part = zielonka_solve(g, p);
        CHECK((part.even_winning & part.odd_winning).none());
        CHECK((part.even_winning | part.odd_winning) == full_set(g.vertex_count()));
        CHECK(part.even_winning == oracle_winning_set(g, Objective::parity(p)));
    }
}

TEST_CASE("parity templates on fixtures")
{
    // G_r with p(w)=0, others 1: w is absorbing and even, reached a.s.
    const auto pg = g_r({1, 1, 0});
    auto res = parity_template(pg.game, pg.priorities);
    CHECK(res.winning_set == full_set(3));
    CHECK(res.winning_set == oracle_winning_set(pg.game, Objective::parity(pg.priorities)));

    // all priorities 0 on G_ex: everything wins with an empty template
    auto ex_res = parity_template(G, ex.priorities);
    CHECK(ex_res.winning_set == full_set(3));
    CHECK(ex_res.tpl.prohibited.empty());
}

TEST_CASE("parity template on deterministic input equals the deterministic construction")
{
    Rng rng(41);
    for (int round = 0; round < 60; ++round) {
        PriorityFunction p;
        const auto g = testgen::random_game(rng, {.deterministic = true}, &p);
        const auto via_reduction = parity_template(g, p);
        const auto det = det_parity_template(g, p);

        CHECK(via_reduction.winning_set == det.even_winning);
        StrategyTemplate direct;
        direct.prohibited = edges_even(g, det.even_winning, det.odd_winning);
        direct.live_groups = det.live_groups;
        direct.colive = det.colive;
        CHECK(via_reduction.tpl == direct);

        const auto part = zielonka_solve(g, p);
        CHECK(det.even_winning == part.even_winning);
        CHECK(det.odd_winning == part.odd_winning);
    }
}

TEST_CASE("winning sets match the oracle for all five objectives")
{
    Rng rng(43);
    for (int round = 0; round < 40; ++round) {
        PriorityFunction p;
        const auto g = testgen::random_game(rng, {}, &p);
        const std::size_t n = g.vertex_count();
        const VertexSet x = testgen::random_subset(rng, n, false);
        for (ObjectiveKind kind :
             {ObjectiveKind::Safety, ObjectiveKind::Reachability, ObjectiveKind::Buchi,
              ObjectiveKind::CoBuchi, ObjectiveKind::Parity}) {
            const Objective o = objective_for(kind, x, p);
            const auto synth = synthesize(g, o);
            const auto oracle = oracle_winning_set(g, o);
            if (synth.winning_set != oracle) {
                CAPTURE(to_string(kind));
                CAPTURE(format_set(x));
                CAPTURE(format_set(synth.winning_set));
                CAPTURE(format_set(oracle));
            }
            CHECK(synth.winning_set == oracle);
        }
    }
}

TEST_CASE("templates are winning: every conforming lasso satisfies the objective")
{
    Rng rng(47);
    for (int round = 0; round < 25; ++round) {
        PriorityFunction p;
        const auto g = testgen::random_game(rng, {.max_vertices = 5}, &p);
        const std::size_t n = g.vertex_count();
        const VertexSet x = testgen::random_subset(rng, n, false);
        for (ObjectiveKind kind :
             {ObjectiveKind::Safety, ObjectiveKind::Reachability, ObjectiveKind::Buchi,
              ObjectiveKind::CoBuchi, ObjectiveKind::Parity}) {
            const Objective o = objective_for(kind, x, p);
            const auto synth = synthesize(g, o);
            validate_template(g, synth.tpl);
            for (const Lasso& l : enumerate_lassos(g, synth.winning_set, 2 * n)) {
                if (!lasso_satisfies_template(g, l, synth.tpl))
                    continue;
                if (!lasso_satisfies(g, l, o)) {
                    CAPTURE(to_string(kind));
                    CHECK(false);
                }
            }
        }
    }
}

TEST_CASE("prohibited edges are exactly the Even edges leaving the winning set")
{
    Rng rng(53);
    for (int round = 0; round < 40; ++round) {
        const auto g = testgen::random_game(rng, {});
        const std::size_t n = g.vertex_count();
        const VertexSet x = testgen::random_subset(rng, n, false);
        for (ObjectiveKind kind : {ObjectiveKind::Safety, ObjectiveKind::Reachability,
                                   ObjectiveKind::Buchi, ObjectiveKind::CoBuchi}) {
            const auto synth = synthesize(g, objective_for(kind, x, {}));
            CHECK(synth.tpl.prohibited ==
                  edges_even(g, synth.winning_set, full_set(n) - synth.winning_set));
        }
    }
}
