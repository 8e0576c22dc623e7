/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_DIGRAPH_HH
#define ARCCONN_GUARD_ARCCONN_DIGRAPH_HH 1

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcconn
{
    using Vertex = int;

    /**
     * Thrown for structurally invalid input: loops, out-of-range endpoints,
     * violated preconditions on orders and vertex sets.
     */
    class InvalidInput : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    struct Arc
    {
        Vertex from;
        Vertex to;

        auto operator<=> (const Arc &) const = default;
    };

    /**
     * A set of arcs, kept sorted lexicographically by (from, to) with no
     * duplicates. This is also the serialisation order.
     */
    class ArcSet
    {
        private:
            std::vector<Arc> _arcs;

        public:
            ArcSet() = default;
            explicit ArcSet(std::vector<Arc> arcs);
            ArcSet(std::initializer_list<Arc> arcs);

            auto size() const -> std::size_t { return _arcs.size(); }
            auto empty() const -> bool { return _arcs.empty(); }
            auto begin() const { return _arcs.begin(); }
            auto end() const { return _arcs.end(); }
            auto arcs() const -> const std::vector<Arc> & { return _arcs; }

            auto contains(Arc a) const -> bool;
            auto insert(Arc a) -> void;
            auto united(const ArcSet & other) const -> ArcSet;
            auto intersection(const ArcSet & other) const -> ArcSet;

            auto operator== (const ArcSet &) const -> bool = default;
    };

    /**
     * A simple digraph on the vertices 0 .. order - 1. Immutable once built.
     * Arcs are numbered by their position in lexicographic order, and the
     * per-vertex arc lists are ordered by the other endpoint.
     */
    class Digraph
    {
        private:
            int _order = 1;
            std::vector<Arc> _arcs;
            std::vector<std::vector<int>> _out_arcs, _in_arcs;

            Digraph(int order, std::vector<Arc> sorted_unique_arcs);

        public:
            Digraph();

            /// Duplicate arcs are merged. Loops and out-of-range endpoints throw InvalidInput.
            static auto from_arc_list(int order, std::span<const Arc> arcs) -> Digraph;
            static auto from_arc_list(int order, std::initializer_list<Arc> arcs) -> Digraph;

            auto order() const -> int { return _order; }
            auto size() const -> int { return int(_arcs.size()); }

            auto arcs() const -> const std::vector<Arc> & { return _arcs; }
            auto arc(int index) const -> Arc { return _arcs[index]; }
            auto arc_set() const -> ArcSet;

            /// Index of the arc in lexicographic order, if present.
            auto arc_index(Arc a) const -> std::optional<int>;
            auto has_arc(Arc a) const -> bool { return arc_index(a).has_value(); }

            auto out_arcs(Vertex v) const -> std::span<const int> { return _out_arcs[v]; }
            auto in_arcs(Vertex v) const -> std::span<const int> { return _in_arcs[v]; }
            auto out_degree(Vertex v) const -> int { return int(_out_arcs[v].size()); }
            auto in_degree(Vertex v) const -> int { return int(_in_arcs[v].size()); }

            auto operator== (const Digraph & other) const -> bool
            {
                return _order == other._order && _arcs == other._arcs;
            }
    };

    /**
     * A simple undirected graph, edges stored with the smaller endpoint first.
     */
    class UndirectedGraph
    {
        private:
            int _order = 1;
            std::vector<std::pair<Vertex, Vertex>> _edges;

        public:
            UndirectedGraph() = default;

            /// Loops, repeated edges and out-of-range endpoints throw InvalidInput.
            static auto from_edge_list(int order, std::span<const std::pair<Vertex, Vertex>> edges) -> UndirectedGraph;
            static auto from_edge_list(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> UndirectedGraph;

            auto order() const -> int { return _order; }
            auto edges() const -> const std::vector<std::pair<Vertex, Vertex>> & { return _edges; }
            auto degree(Vertex v) const -> int;
            auto min_degree() const -> int;
            auto is_connected() const -> bool;
    };

    struct DegreeBounds
    {
        int min_out;
        int min_in;

        auto operator<=> (const DegreeBounds &) const = default;
    };

    /// Tarjan's algorithm; component ids are in reverse topological order.
    auto strong_components(const Digraph & d) -> std::vector<int>;

    /// A one-vertex digraph is strong.
    auto is_strong(const Digraph & d) -> bool;

    auto degrees(const Digraph & d) -> DegreeBounds;

    /// Replaces every edge by the two opposite arcs.
    auto biorient(const UndirectedGraph & g) -> Digraph;

    struct InducedSubgraph
    {
        Digraph digraph;
        std::vector<Vertex> old_to_new;   ///< -1 for vertices not kept
        std::vector<Vertex> new_to_old;
    };

    /// New indices follow increasing old index.
    auto induced_subgraph(const Digraph & d, std::span<const Vertex> vertices) -> InducedSubgraph;

    /// D with the given arcs deleted (arcs not in D are ignored).
    auto without_arcs(const Digraph & d, const ArcSet & removed) -> Digraph;

    /**
     * True iff the subgraph formed by the arcs and their endpoints is strong
     * and contains every vertex of seeds.
     */
    auto arc_subset_spanning_check(const Digraph & d, const ArcSet & arcs, std::span<const Vertex> seeds) -> bool;
}

#endif
