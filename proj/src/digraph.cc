/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/digraph.hh>

#include <algorithm>
#include <functional>
#include <numeric>

using std::optional;
using std::pair;
using std::span;
using std::to_string;
using std::vector;

namespace arcconn
{
    namespace
    {
        auto normalise(vector<Arc> & arcs) -> void
        {
            std::sort(arcs.begin(), arcs.end());
            arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        }
    }

    ArcSet::ArcSet(vector<Arc> arcs) :
        _arcs(std::move(arcs))
    {
        normalise(_arcs);
    }

    ArcSet::ArcSet(std::initializer_list<Arc> arcs) :
        _arcs(arcs)
    {
        normalise(_arcs);
    }

    auto ArcSet::contains(Arc a) const -> bool
    {
        return std::binary_search(_arcs.begin(), _arcs.end(), a);
    }

    auto ArcSet::insert(Arc a) -> void
    {
        auto pos = std::lower_bound(_arcs.begin(), _arcs.end(), a);
        if (pos == _arcs.end() || *pos != a)
            _arcs.insert(pos, a);
    }

    auto ArcSet::united(const ArcSet & other) const -> ArcSet
    {
        ArcSet result;
        std::set_union(_arcs.begin(), _arcs.end(), other._arcs.begin(), other._arcs.end(), std::back_inserter(result._arcs));
        return result;
    }

    auto ArcSet::intersection(const ArcSet & other) const -> ArcSet
    {
        ArcSet result;
        std::set_intersection(_arcs.begin(), _arcs.end(), other._arcs.begin(), other._arcs.end(), std::back_inserter(result._arcs));
        return result;
    }

    Digraph::Digraph() :
        Digraph(1, {})
    {
    }

    Digraph::Digraph(int order, vector<Arc> arcs) :
        _order(order),
        _arcs(std::move(arcs)),
        _out_arcs(order),
        _in_arcs(order)
    {
        // arcs are sorted by (from, to), so out lists come out sorted by head
        for (int i = 0 ; i < int(_arcs.size()) ; ++i)
            _out_arcs[_arcs[i].from].push_back(i);

        vector<int> by_head(_arcs.size());
        std::iota(by_head.begin(), by_head.end(), 0);
        std::stable_sort(by_head.begin(), by_head.end(), [&] (int a, int b) {
                return pair{ _arcs[a].to, _arcs[a].from } < pair{ _arcs[b].to, _arcs[b].from };
                });
        for (int i : by_head)
            _in_arcs[_arcs[i].to].push_back(i);
    }

    auto Digraph::from_arc_list(int order, span<const Arc> arcs) -> Digraph
    {
        if (order < 1)
            throw InvalidInput{ "digraph order must be at least 1, got " + to_string(order) };

        vector<Arc> result;
        result.reserve(arcs.size());
        for (auto & a : arcs) {
            if (a.from < 0 || a.from >= order || a.to < 0 || a.to >= order)
                throw InvalidInput{ "arc (" + to_string(a.from) + "," + to_string(a.to) + ") has an endpoint outside [0," + to_string(order) + ")" };
            if (a.from == a.to)
                throw InvalidInput{ "loop at vertex " + to_string(a.from) + " is not allowed" };
            result.push_back(a);
        }
        normalise(result);
        return Digraph{ order, std::move(result) };
    }

    auto Digraph::from_arc_list(int order, std::initializer_list<Arc> arcs) -> Digraph
    {
        return from_arc_list(order, span<const Arc>{ arcs.begin(), arcs.size() });
    }

    auto Digraph::arc_set() const -> ArcSet
    {
        return ArcSet{ _arcs };
    }

    auto Digraph::arc_index(Arc a) const -> optional<int>
    {
        auto pos = std::lower_bound(_arcs.begin(), _arcs.end(), a);
        if (pos == _arcs.end() || *pos != a)
            return std::nullopt;
        return int(pos - _arcs.begin());
    }

    auto UndirectedGraph::from_edge_list(int order, span<const pair<Vertex, Vertex>> edges) -> UndirectedGraph
    {
        if (order < 1)
            throw InvalidInput{ "graph order must be at least 1, got " + to_string(order) };

        UndirectedGraph result;
        result._order = order;
        for (auto [u, v] : edges) {
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw InvalidInput{ "edge {" + to_string(u) + "," + to_string(v) + "} has an endpoint outside [0," + to_string(order) + ")" };
            if (u == v)
                throw InvalidInput{ "loop at vertex " + to_string(u) + " is not allowed" };
            result._edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(result._edges.begin(), result._edges.end());
        if (std::adjacent_find(result._edges.begin(), result._edges.end()) != result._edges.end())
            throw InvalidInput{ "repeated edge in an undirected graph" };
        return result;
    }

    auto UndirectedGraph::from_edge_list(int order, std::initializer_list<pair<Vertex, Vertex>> edges) -> UndirectedGraph
    {
        return from_edge_list(order, span<const pair<Vertex, Vertex>>{ edges.begin(), edges.size() });
    }

    auto UndirectedGraph::degree(Vertex v) const -> int
    {
        return int(std::count_if(_edges.begin(), _edges.end(), [&] (auto & e) { return e.first == v || e.second == v; }));
    }

    auto UndirectedGraph::min_degree() const -> int
    {
        vector<int> deg(_order, 0);
        for (auto [u, v] : _edges) {
            ++deg[u];
            ++deg[v];
        }
        return *std::min_element(deg.begin(), deg.end());
    }

    auto UndirectedGraph::is_connected() const -> bool
    {
        return is_strong(biorient(*this));
    }

    auto strong_components(const Digraph & d) -> vector<int>
    {
        // iterative Tarjan
        int n = d.order();
        vector<int> index(n, -1), low(n, 0), component(n, -1), stack, call_stack, edge_pos(n, 0);
        vector<bool> on_stack(n, false);
        int next_index = 0, next_component = 0;

        for (Vertex root = 0 ; root < n ; ++root) {
            if (index[root] != -1)
                continue;

            call_stack.push_back(root);
            index[root] = low[root] = next_index++;
            stack.push_back(root);
            on_stack[root] = true;

            while (! call_stack.empty()) {
                Vertex v = call_stack.back();
                auto out = d.out_arcs(v);
                if (edge_pos[v] < int(out.size())) {
                    Vertex w = d.arc(out[edge_pos[v]++]).to;
                    if (index[w] == -1) {
                        index[w] = low[w] = next_index++;
                        stack.push_back(w);
                        on_stack[w] = true;
                        call_stack.push_back(w);
                    }
                    else if (on_stack[w])
                        low[v] = std::min(low[v], index[w]);
                }
                else {
                    call_stack.pop_back();
                    if (! call_stack.empty())
                        low[call_stack.back()] = std::min(low[call_stack.back()], low[v]);

                    if (low[v] == index[v]) {
                        Vertex w;
                        do {
                            w = stack.back();
                            stack.pop_back();
                            on_stack[w] = false;
                            component[w] = next_component;
                        } while (w != v);
                        ++next_component;
                    }
                }
            }
        }

        return component;
    }

    auto is_strong(const Digraph & d) -> bool
    {
        auto component = strong_components(d);
        return std::all_of(component.begin(), component.end(), [&] (int c) { return c == component[0]; });
    }

    auto degrees(const Digraph & d) -> DegreeBounds
    {
        DegreeBounds result{ d.out_degree(0), d.in_degree(0) };
        for (Vertex v = 1 ; v < d.order() ; ++v) {
            result.min_out = std::min(result.min_out, d.out_degree(v));
            result.min_in = std::min(result.min_in, d.in_degree(v));
        }
        return result;
    }

    auto biorient(const UndirectedGraph & g) -> Digraph
    {
        vector<Arc> arcs;
        for (auto [u, v] : g.edges()) {
            arcs.push_back(Arc{ u, v });
            arcs.push_back(Arc{ v, u });
        }
        return Digraph::from_arc_list(g.order(), arcs);
    }

    auto induced_subgraph(const Digraph & d, span<const Vertex> vertices) -> InducedSubgraph
    {
        if (vertices.empty())
            throw InvalidInput{ "induced subgraph needs at least one vertex" };

        vector<Vertex> old_to_new(d.order(), -1);
        for (Vertex v : vertices) {
            if (v < 0 || v >= d.order())
                throw InvalidInput{ "vertex " + to_string(v) + " is out of range" };
            old_to_new[v] = 0;
        }

        vector<Vertex> new_to_old;
        for (Vertex v = 0 ; v < d.order() ; ++v)
            if (old_to_new[v] != -1) {
                old_to_new[v] = int(new_to_old.size());
                new_to_old.push_back(v);
            }

        vector<Arc> arcs;
        for (auto & a : d.arcs())
            if (old_to_new[a.from] != -1 && old_to_new[a.to] != -1)
                arcs.push_back(Arc{ old_to_new[a.from], old_to_new[a.to] });

        return InducedSubgraph{ Digraph::from_arc_list(int(new_to_old.size()), arcs), std::move(old_to_new), std::move(new_to_old) };
    }

    auto without_arcs(const Digraph & d, const ArcSet & removed) -> Digraph
    {
        vector<Arc> kept;
        for (auto & a : d.arcs())
            if (! removed.contains(a))
                kept.push_back(a);
        return Digraph::from_arc_list(d.order(), kept);
    }

    auto arc_subset_spanning_check(const Digraph & d, const ArcSet & arcs, span<const Vertex> seeds) -> bool
    {
        if (arcs.empty())
            return false;

        vector<Vertex> touched;
        for (auto & a : arcs) {
            if (! d.has_arc(a))
                return false;
            touched.push_back(a.from);
            touched.push_back(a.to);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

        for (Vertex s : seeds)
            if (! std::binary_search(touched.begin(), touched.end(), s))
                return false;

        vector<Vertex> local(d.order(), -1);
        for (int i = 0 ; i < int(touched.size()) ; ++i)
            local[touched[i]] = i;

        vector<Arc> relabelled;
        for (auto & a : arcs)
            relabelled.push_back(Arc{ local[a.from], local[a.to] });

        return is_strong(Digraph::from_arc_list(int(touched.size()), relabelled));
    }
}
