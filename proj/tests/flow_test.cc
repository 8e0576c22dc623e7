/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/flow.hh>
#include <arcconn/generators.hh>
#include <arcconn/product.hh>

#include "oracles.hh"

#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

using namespace arcconn;

using std::vector;

namespace
{
    auto check_paths(const Digraph & d, const LocalArcConnectivity & r) -> void
    {
        CHECK(int(r.paths.size()) == r.value);
        CHECK(int(r.cut.size()) == r.value);
        std::set<Arc> used;
        for (auto & path : r.paths) {
            REQUIRE(path.size() >= 2);
            CHECK(path.front() == r.source);
            CHECK(path.back() == r.sink);
            for (size_t k = 0 ; k + 1 < path.size() ; ++k) {
                Arc a{ path[k], path[k + 1] };
                CHECK(d.has_arc(a));
                CHECK(used.insert(a).second);
            }
        }
        for (auto & a : r.cut)
            CHECK(d.has_arc(a));
        CHECK(max_flow_unit(without_arcs(d, r.cut), r.source, r.sink).value == 0);
    }
}

TEST_CASE("Local connectivity on small examples")
{
    CHECK(max_flow_unit(directed_cycle(5), 0, 3).value == 1);
    CHECK(max_flow_unit(complete_digraph(4), 1, 2).value == 3);
    CHECK(max_flow_unit(Digraph::from_arc_list(3, { { 0, 1 } }), 1, 0).value == 0);

    auto p = cartesian_product(directed_cycle(3), bidirected_cycle(3));
    auto r = max_flow_unit(p.digraph(), p.encode(0, 0), p.encode(1, 1));
    CHECK(r.value == 3);
    CHECK(r.value == oracle::max_disjoint_paths(p.digraph(), p.encode(0, 0), p.encode(1, 1)));
    check_paths(p.digraph(), r);

    CHECK_THROWS_AS(max_flow_unit(directed_cycle(3), 1, 1), InvalidInput);
}

TEST_CASE("Menger duality against oracles")
{
    Rng rng{ 17 };
    for (int trial = 0 ; trial < 150 ; ++trial) {
        int n = 2 + trial % 6;
        auto d = oracle::random_digraph(rng, n, 0.2 + 0.5 * rng.real());
        Vertex s = Vertex(rng.below(n)), t = Vertex(rng.below(n));
        if (s == t)
            continue;
        auto r = max_flow_unit(d, s, t);
        CHECK(r.value == oracle::local_cut(d, s, t));
        if (d.size() <= 20)
            CHECK(r.value == oracle::max_disjoint_paths(d, s, t));
        check_paths(d, r);
        CHECK(max_arc_disjoint_paths(d, s, t, ArcBits(d.size())) == r.value);
        if (r.value > 0)
            CHECK(max_arc_disjoint_paths(d, s, t, ArcBits(d.size()), r.value - 1) == r.value - 1);
    }
}

TEST_CASE("Blocked arcs are not used")
{
    auto d = complete_digraph(4);
    ArcBits blocked(d.size());
    blocked.set(*d.arc_index({ 0, 1 }));
    CHECK(max_arc_disjoint_paths(d, 0, 1, blocked) == 2);
    blocked.set(*d.arc_index({ 0, 2 }));
    blocked.set(*d.arc_index({ 0, 3 }));
    CHECK(max_arc_disjoint_paths(d, 0, 1, blocked) == 0);
}

TEST_CASE("Global connectivity of named digraphs")
{
    CHECK(arc_connectivity(directed_cycle(6)).lambda == 1);
    CHECK(arc_connectivity(bidirected_cycle(5)).lambda == 2);
    CHECK(arc_connectivity(complete_digraph(5)).lambda == 4);
    CHECK(arc_connectivity(bidirected_tree(TreeShape{ TreeKind::star, 5 })).lambda == 1);
    CHECK(arc_connectivity(cartesian_product(directed_cycle(3), directed_cycle(3)).digraph()).lambda == 2);

    auto not_strong = arc_connectivity(Digraph::from_arc_list(3, { { 0, 1 }, { 1, 2 } }));
    CHECK(! not_strong.strong);
    CHECK(not_strong.lambda == 0);
    CHECK(not_strong.min_cut.empty());

    CHECK_THROWS_AS(arc_connectivity(Digraph::from_arc_list(1, {})), InvalidInput);
}

TEST_CASE("Global connectivity against the cut oracle")
{
    Rng rng{ 29 };
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto d = oracle::random_digraph(rng, 2 + trial % 7, 0.3 + 0.6 * rng.real());
        auto r = arc_connectivity(d);
        CHECK(r.strong == oracle::is_strong(d));
        if (! r.strong)
            continue;
        CHECK(r.lambda == oracle::arc_connectivity(d));
        CHECK(int(r.min_cut.size()) == r.lambda);
        CHECK(verify_cut(d, r.min_cut));
        CHECK(r.lambda <= std::min(r.delta_out, r.delta_in));
        CHECK(r.delta_out == degrees(d).min_out);
        CHECK(r.delta_in == degrees(d).min_in);
    }
}

TEST_CASE("Biorientation connectivity equals edge connectivity")
{
    for (RngSeed seed = 1 ; seed <= 40 ; ++seed) {
        auto g = random_connected_graph(2 + int(seed % 6), 0.35, seed);
        CHECK(arc_connectivity(biorient(g)).lambda == oracle::edge_connectivity(g));
    }
}

TEST_CASE("Cut verification")
{
    auto d = directed_cycle(4);
    CHECK(verify_cut(d, ArcSet{ { 2, 3 } }));
    CHECK(verify_cut(d, ArcSet{}) == false);
    auto k = complete_digraph(3);
    CHECK(verify_cut(k, ArcSet{ { 0, 1 }, { 0, 2 } }));
    CHECK(! verify_cut(k, ArcSet{ { 0, 1 }, { 1, 2 } }));
}
