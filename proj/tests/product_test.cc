/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/flow.hh>
#include <arcconn/generators.hh>
#include <arcconn/product.hh>

#include "oracles.hh"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace arcconn;

using std::vector;

TEST_CASE("Product of two directed cycles")
{
    auto p = cartesian_product(directed_cycle(3), directed_cycle(4));
    CHECK(p.digraph().order() == 12);
    CHECK(p.digraph().size() == 24);
    CHECK(p.n() == 3);
    CHECK(p.m() == 4);
}

TEST_CASE("Product of a directed and a bidirected triangle")
{
    auto p = cartesian_product(directed_cycle(3), bidirected_cycle(3));
    CHECK(p.digraph().order() == 9);
    CHECK(p.digraph().size() == 27);
    CHECK(is_strong(p.digraph()));
    CHECK(p.digraph() == oracle::product(directed_cycle(3), bidirected_cycle(3)));
    CHECK(degrees(p.digraph()) == DegreeBounds{ 3, 3 });
}

TEST_CASE("Product matches the definition")
{
    Rng rng{ 21 };
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = oracle::random_digraph(rng, 1 + trial % 4, 0.5);
        auto h = oracle::random_digraph(rng, 1 + (trial / 4) % 4, 0.5);
        auto p = cartesian_product(g, h);
        CHECK(p.digraph() == oracle::product(g, h));
        CHECK(p.digraph().size() == g.size() * h.order() + h.size() * g.order());
    }
}

TEST_CASE("Flat index encoding")
{
    auto p = cartesian_product(directed_cycle(3), directed_cycle(4));
    for (int i = 0 ; i < 3 ; ++i)
        for (int j = 0 ; j < 4 ; ++j) {
            CHECK(p.encode(i, j) == i * 4 + j);
            CHECK(p.decode(p.encode(i, j)) == ProductVertex{ i, j });
        }
}

TEST_CASE("Strong product iff both factors strong")
{
    auto strong = directed_cycle(3);
    auto not_strong = Digraph::from_arc_list(3, { { 0, 1 }, { 1, 2 } });
    CHECK(! is_strong(cartesian_product(strong, not_strong).digraph()));

    Rng rng{ 8 };
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = oracle::random_digraph(rng, 1 + trial % 4, 0.3 + 0.4 * rng.real());
        auto h = oracle::random_digraph(rng, 1 + (trial / 3) % 4, 0.3 + 0.4 * rng.real());
        CHECK(is_strong(cartesian_product(g, h).digraph()) == (oracle::is_strong(g) && oracle::is_strong(h)));
    }
}

TEST_CASE("Degrees add up in products")
{
    for (RngSeed seed = 1 ; seed <= 40 ; ++seed) {
        auto g = random_strong_digraph(2 + int(seed % 4), 0.3, seed);
        auto h = random_strong_digraph(2 + int(seed / 4 % 4), 0.5, seed + 1000);
        auto dg = degrees(g), dh = degrees(h), dp = degrees(cartesian_product(g, h).digraph());
        CHECK(dp.min_out == dg.min_out + dh.min_out);
        CHECK(dp.min_in == dg.min_in + dh.min_in);
    }
}

TEST_CASE("Swapping factors is an isomorphism")
{
    for (RngSeed seed = 1 ; seed <= 20 ; ++seed) {
        auto g = random_strong_digraph(2 + int(seed % 3), 0.4, seed);
        auto h = random_strong_digraph(2 + int(seed / 3 % 3), 0.4, seed + 77);
        auto gh = cartesian_product(g, h), hg = cartesian_product(h, g);
        CHECK(swap_factors(gh, gh.digraph().arc_set()) == hg.digraph().arc_set());
        CHECK(arc_connectivity(gh.digraph()).lambda == arc_connectivity(hg.digraph()).lambda);
    }
}

TEST_CASE("Products associate")
{
    auto a = directed_cycle(2), b = directed_cycle(3), c = bidirected_cycle(3);
    auto left = cartesian_product(cartesian_product(a, b).digraph(), c);
    auto right = cartesian_product(a, cartesian_product(b, c).digraph());
    // both use flat index (i * 3 + j) * 3 + k
    CHECK(left.digraph() == right.digraph());
}

TEST_CASE("Fibers")
{
    auto p = cartesian_product(directed_cycle(3), directed_cycle(4));
    auto g2 = g_fiber(p, 2);
    CHECK(g2.axis == FiberAxis::g_fiber);
    CHECK(g2.vertices == vector<Vertex>{ p.encode(0, 2), p.encode(1, 2), p.encode(2, 2) });
    CHECK(induced_subgraph(p.digraph(), g2.vertices).digraph == directed_cycle(3));

    auto h0 = h_fiber(p, 0);
    CHECK(h0.vertices.size() == 4);
    CHECK(induced_subgraph(p.digraph(), h0.vertices).digraph == directed_cycle(4));

    CHECK_THROWS_AS(g_fiber(p, 4), InvalidInput);
    CHECK_THROWS_AS(h_fiber(p, -1), InvalidInput);
}

TEST_CASE("Fiber of an arc")
{
    auto p = cartesian_product(directed_cycle(3), directed_cycle(4));
    CHECK(fiber_of_arc(p, Arc{ p.encode(0, 1), p.encode(1, 1) }) == std::pair{ FiberAxis::g_fiber, 1 });
    CHECK(fiber_of_arc(p, Arc{ p.encode(2, 1), p.encode(2, 2) }) == std::pair{ FiberAxis::h_fiber, 2 });
    CHECK_THROWS_AS(fiber_of_arc(p, Arc{ p.encode(0, 0), p.encode(1, 1) }), InvalidInput);
}

TEST_CASE("Translating between fibers")
{
    auto p = cartesian_product(directed_cycle(3), directed_cycle(4));
    ArcSet a{ { p.encode(0, 1), p.encode(1, 1) } };
    CHECK(translate_subgraph(p, a, FiberAxis::g_fiber, 2) == ArcSet{ { p.encode(0, 2), p.encode(1, 2) } });
    CHECK(translate_subgraph(p, a, FiberAxis::g_fiber, 1) == a);

    ArcSet path{ { p.encode(0, 0), p.encode(0, 1) }, { p.encode(0, 1), p.encode(0, 2) }, { p.encode(0, 2), p.encode(0, 3) } };
    auto moved = translate_subgraph(p, path, FiberAxis::h_fiber, 2);
    CHECK(moved == ArcSet{ { p.encode(2, 0), p.encode(2, 1) }, { p.encode(2, 1), p.encode(2, 2) }, { p.encode(2, 2), p.encode(2, 3) } });
    for (auto & arc : moved)
        CHECK(p.digraph().has_arc(arc));

    ArcSet mixed{ { p.encode(0, 0), p.encode(0, 1) }, { p.encode(0, 0), p.encode(1, 0) } };
    CHECK_THROWS_AS(translate_subgraph(p, mixed, FiberAxis::h_fiber, 1), InvalidInput);
    ArcSet two_fibers{ { p.encode(0, 0), p.encode(0, 1) }, { p.encode(1, 0), p.encode(1, 1) } };
    CHECK_THROWS_AS(translate_subgraph(p, two_fibers, FiberAxis::h_fiber, 1), InvalidInput);
}

TEST_CASE("Translation keeps size and strongness")
{
    auto g = complete_digraph(3), h = bidirected_cycle(4);
    auto p = cartesian_product(g, h);
    ArcSet triangle{ { 0, 1 }, { 1, 2 }, { 2, 0 } };
    auto in_fiber = lift_to_fiber(p, triangle, FiberAxis::g_fiber, 0);
    for (int j = 0 ; j < 4 ; ++j) {
        auto moved = translate_subgraph(p, in_fiber, FiberAxis::g_fiber, j);
        CHECK(moved.size() == 3);
        Vertex seed[] = { p.encode(0, j) };
        CHECK(arc_subset_spanning_check(p.digraph(), moved, seed));
    }
}
