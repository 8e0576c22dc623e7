/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/generators.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using std::pair;
using std::to_string;
using std::vector;

namespace arcconn
{
    namespace
    {
        auto random_permutation(int n, Rng & rng) -> vector<Vertex>
        {
            vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1 ; i > 0 ; --i)
                std::swap(perm[i], perm[rng.below(i + 1)]);
            return perm;
        }

        auto random_tree_edges(int n, Rng & rng) -> vector<pair<Vertex, Vertex>>
        {
            // random recursive tree on a random labelling
            auto perm = random_permutation(n, rng);
            vector<pair<Vertex, Vertex>> edges;
            for (int i = 1 ; i < n ; ++i)
                edges.emplace_back(perm[rng.below(i)], perm[i]);
            return edges;
        }
    }

    auto tree_shape_name(const TreeShape & shape) -> std::string
    {
        switch (shape.kind) {
            case TreeKind::path:        return "path";
            case TreeKind::star:        return "star";
            case TreeKind::caterpillar: return "caterpillar";
            case TreeKind::random:      return "random-" + to_string(shape.seed);
        }
        return "?";
    }

    auto tree(const TreeShape & shape) -> UndirectedGraph
    {
        int m = shape.order;
        if (m < 2)
            throw InvalidInput{ "a tree needs at least 2 vertices, got " + to_string(m) };

        vector<pair<Vertex, Vertex>> edges;
        switch (shape.kind) {
            case TreeKind::path:
                for (int i = 0 ; i + 1 < m ; ++i)
                    edges.emplace_back(i, i + 1);
                break;

            case TreeKind::star:
                for (int i = 1 ; i < m ; ++i)
                    edges.emplace_back(0, i);
                break;

            case TreeKind::caterpillar: {
                // spine 0 .. s-1, remaining vertices hang off the spine in turn
                int spine = (m + 1) / 2;
                for (int i = 0 ; i + 1 < spine ; ++i)
                    edges.emplace_back(i, i + 1);
                for (int i = spine ; i < m ; ++i)
                    edges.emplace_back((i - spine) % spine, i);
                break;
            }

            case TreeKind::random: {
                Rng rng{ shape.seed };
                edges = random_tree_edges(m, rng);
                break;
            }
        }

        return UndirectedGraph::from_edge_list(m, edges);
    }

    auto directed_cycle(int n) -> Digraph
    {
        if (n < 2)
            throw InvalidInput{ "a directed cycle needs at least 2 vertices, got " + to_string(n) };

        vector<Arc> arcs;
        for (int i = 0 ; i < n ; ++i)
            arcs.push_back(Arc{ i, (i + 1) % n });
        return Digraph::from_arc_list(n, arcs);
    }

    auto bidirected_cycle(int m) -> Digraph
    {
        if (m < 3)
            throw InvalidInput{ "a bidirected cycle needs at least 3 vertices, got " + to_string(m) };

        vector<pair<Vertex, Vertex>> edges;
        for (int i = 0 ; i < m ; ++i)
            edges.emplace_back(i, (i + 1) % m);
        return biorient(UndirectedGraph::from_edge_list(m, edges));
    }

    auto bidirected_tree(const TreeShape & shape) -> Digraph
    {
        return biorient(tree(shape));
    }

    auto complete_digraph(int m) -> Digraph
    {
        if (m < 2)
            throw InvalidInput{ "a complete digraph needs at least 2 vertices, got " + to_string(m) };

        vector<Arc> arcs;
        for (int u = 0 ; u < m ; ++u)
            for (int v = 0 ; v < m ; ++v)
                if (u != v)
                    arcs.push_back(Arc{ u, v });
        return Digraph::from_arc_list(m, arcs);
    }

    auto random_strong_digraph(int n, double extra_arc_prob, RngSeed seed) -> Digraph
    {
        if (n < 2)
            throw InvalidInput{ "a random strong digraph needs at least 2 vertices, got " + to_string(n) };
        if (! (extra_arc_prob >= 0.0 && extra_arc_prob <= 1.0))
            throw InvalidInput{ "extra arc probability must lie in [0,1]" };

        Rng rng{ seed };
        auto perm = random_permutation(n, rng);

        std::set<Arc> arcs;
        for (int i = 0 ; i < n ; ++i)
            arcs.insert(Arc{ perm[i], perm[(i + 1) % n] });

        // one draw per ordered pair, present or not, so the stream is fixed by n
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if (u != v) {
                    double r = rng.real();
                    if (r < extra_arc_prob)
                        arcs.insert(Arc{ u, v });
                }

        vector<Arc> list(arcs.begin(), arcs.end());
        return Digraph::from_arc_list(n, list);
    }

    auto random_connected_graph(int n, double extra_edge_prob, RngSeed seed) -> UndirectedGraph
    {
        if (n < 1)
            throw InvalidInput{ "graph order must be positive" };

        Rng rng{ seed };
        std::set<pair<Vertex, Vertex>> edges;
        for (auto [u, v] : random_tree_edges(n, rng))
            edges.emplace(std::min(u, v), std::max(u, v));

        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v) {
                double r = rng.real();
                if (r < extra_edge_prob)
                    edges.emplace(u, v);
            }

        vector<pair<Vertex, Vertex>> list(edges.begin(), edges.end());
        return UndirectedGraph::from_edge_list(n, list);
    }
}
