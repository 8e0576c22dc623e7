/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_TESTS_ORACLES_HH
#define ARCCONN_GUARD_TESTS_ORACLES_HH 1

// Slow, obviously-correct reference implementations. None of these call into
// the library's algorithms; they only read arcs out of a Digraph.

#include <arcconn/digraph.hh>
#include <arcconn/generators.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle
{
    using arcconn::Arc;
    using arcconn::Digraph;
    using arcconn::UndirectedGraph;
    using arcconn::Vertex;

    inline auto reach_matrix(const Digraph & d) -> std::vector<std::vector<char>>
    {
        int n = d.order();
        std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
        for (int v = 0 ; v < n ; ++v)
            r[v][v] = 1;
        for (auto & a : d.arcs())
            r[a.from][a.to] = 1;
        for (int k = 0 ; k < n ; ++k)
            for (int i = 0 ; i < n ; ++i)
                if (r[i][k])
                    for (int j = 0 ; j < n ; ++j)
                        if (r[k][j])
                            r[i][j] = 1;
        return r;
    }

    inline auto is_strong(const Digraph & d) -> bool
    {
        auto r = reach_matrix(d);
        for (auto & row : r)
            for (char c : row)
                if (! c)
                    return false;
        return true;
    }

    /// Arcs leaving the vertex set `mask`.
    inline auto out_cut(const Digraph & d, std::uint32_t mask) -> int
    {
        int count = 0;
        for (auto & a : d.arcs())
            if ((mask >> a.from & 1) && ! (mask >> a.to & 1))
                ++count;
        return count;
    }

    /// min over vertex sets X with s in X, t not in X, of |arcs leaving X|.
    inline auto local_cut(const Digraph & d, Vertex s, Vertex t) -> int
    {
        int best = d.size();
        for (std::uint32_t mask = 0 ; mask < (std::uint32_t{ 1 } << d.order()) ; ++mask)
            if ((mask >> s & 1) && ! (mask >> t & 1))
                best = std::min(best, out_cut(d, mask));
        return best;
    }

    /// min over nonempty proper vertex sets of |arcs leaving|.
    inline auto arc_connectivity(const Digraph & d) -> int
    {
        int best = d.size();
        std::uint32_t full = (std::uint32_t{ 1 } << d.order()) - 1;
        for (std::uint32_t mask = 1 ; mask < full ; ++mask)
            best = std::min(best, out_cut(d, mask));
        return best;
    }

    inline auto connected_without(const UndirectedGraph & g, const std::vector<char> & removed) -> bool
    {
        int n = g.order();
        std::vector<int> label(n);
        for (int v = 0 ; v < n ; ++v)
            label[v] = v;
        std::function<int (int)> find = [&] (int v) { return label[v] == v ? v : label[v] = find(label[v]); };
        int components = n;
        for (size_t e = 0 ; e < g.edges().size() ; ++e)
            if (! removed[e]) {
                int a = find(g.edges()[e].first), b = find(g.edges()[e].second);
                if (a != b) {
                    label[a] = b;
                    --components;
                }
            }
        return components == 1;
    }

    /// Smallest number of edges whose deletion disconnects g, by trying edge subsets in size order.
    inline auto edge_connectivity(const UndirectedGraph & g) -> int
    {
        int m = int(g.edges().size());
        std::vector<char> removed(m, 0);
        for (int k = 0 ; k <= m ; ++k) {
            bool found = false;
            std::function<void (int, int)> choose = [&] (int start, int left) {
                if (found)
                    return;
                if (left == 0) {
                    found = ! connected_without(g, removed);
                    return;
                }
                for (int e = start ; e <= m - left && ! found ; ++e) {
                    removed[e] = 1;
                    choose(e + 1, left - 1);
                    removed[e] = 0;
                }
            };
            choose(0, k);
            if (found)
                return k;
        }
        return m;
    }

    /// All simple from-to paths as arc bitmasks over arc indices (requires <= 64 arcs).
    inline auto simple_paths(const Digraph & d, Vertex from, Vertex to) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        std::vector<char> on_path(d.order(), 0);
        std::function<void (Vertex, std::uint64_t)> dfs = [&] (Vertex v, std::uint64_t arcs) {
            if (v == to) {
                result.push_back(arcs);
                return;
            }
            on_path[v] = 1;
            for (int a = 0 ; a < d.size() ; ++a)
                if (d.arc(a).from == v && ! on_path[d.arc(a).to])
                    dfs(d.arc(a).to, arcs | (std::uint64_t{ 1 } << a));
            on_path[v] = 0;
        };
        dfs(from, 0);
        return result;
    }

    /// Maximum number of pairwise arc-disjoint s-t paths, by exhaustive packing.
    inline auto max_disjoint_paths(const Digraph & d, Vertex s, Vertex t) -> int
    {
        auto paths = simple_paths(d, s, t);
        int best = 0;
        std::function<void (size_t, std::uint64_t, int)> pack = [&] (size_t i, std::uint64_t used, int count) {
            best = std::max(best, count);
            for (size_t j = i ; j < paths.size() ; ++j)
                if (! (paths[j] & used))
                    pack(j + 1, used | paths[j], count + 1);
        };
        pack(0, 0, 0);
        return best;
    }

    /// G □ H straight from the definition, flat index i * |H| + j.
    inline auto product(const Digraph & g, const Digraph & h) -> Digraph
    {
        int n = g.order(), m = h.order();
        std::vector<Arc> arcs;
        for (int u = 0 ; u < n * m ; ++u)
            for (int v = 0 ; v < n * m ; ++v) {
                int ui = u / m, uj = u % m, vi = v / m, vj = v % m;
                if ((ui == vi && h.has_arc(Arc{ uj, vj })) || (uj == vj && g.has_arc(Arc{ ui, vi })))
                    arcs.push_back(Arc{ u, v });
            }
        return Digraph::from_arc_list(n * m, arcs);
    }

    /// Any digraph, strong or not: each ordered pair independently with probability p.
    inline auto random_digraph(arcconn::Rng & rng, int n, double p) -> Digraph
    {
        std::vector<Arc> arcs;
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if (u != v && rng.real() < p)
                    arcs.push_back(Arc{ u, v });
        return Digraph::from_arc_list(n, arcs);
    }
}

#endif
