/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_PRODUCT_HH
#define ARCCONN_GUARD_ARCCONN_PRODUCT_HH 1

#include <arcconn/digraph.hh>
#include <arcconn/digraph_io.hh>

#include <utility>
#include <vector>

namespace arcconn
{
    struct ProductVertex
    {
        int i;   ///< vertex of the first factor G
        int j;   ///< vertex of the second factor H

        auto operator<=> (const ProductVertex &) const = default;
    };

    /**
     * The Cartesian product G □ H. Vertex (i, j) has flat index i * m + j,
     * where m = |H|. An arc changes exactly one coordinate along an arc of
     * the corresponding factor.
     */
    class ProductDigraph
    {
        private:
            Digraph _digraph;
            int _n, _m;

        public:
            ProductDigraph(Digraph digraph, int n, int m) : _digraph(std::move(digraph)), _n(n), _m(m) { }

            auto digraph() const -> const Digraph & { return _digraph; }
            auto n() const -> int { return _n; }
            auto m() const -> int { return _m; }
            auto shape() const -> ProductShape { return ProductShape{ _n, _m }; }

            auto encode(int i, int j) const -> Vertex { return i * _m + j; }
            auto encode(ProductVertex v) const -> Vertex { return encode(v.i, v.j); }
            auto decode(Vertex v) const -> ProductVertex { return ProductVertex{ v / _m, v % _m }; }
    };

    auto cartesian_product(const Digraph & g, const Digraph & h) -> ProductDigraph;

    enum class FiberAxis
    {
        g_fiber,   ///< G(v_j): second coordinate fixed, a copy of G
        h_fiber    ///< H(u_i): first coordinate fixed, a copy of H
    };

    struct FiberRef
    {
        FiberAxis axis;
        int fixed;
        std::vector<Vertex> vertices;   ///< flat indices, in factor order
    };

    auto g_fiber(const ProductDigraph & p, int j) -> FiberRef;
    auto h_fiber(const ProductDigraph & p, int i) -> FiberRef;

    /// The fiber an arc lies in: G-arcs keep j fixed, H-arcs keep i fixed.
    auto fiber_of_arc(const ProductDigraph & p, Arc a) -> std::pair<FiberAxis, int>;

    /**
     * Image of an arc set lying inside one fiber under substitution of the
     * fixed coordinate. Arcs from several fibers (or not in the product)
     * throw InvalidInput.
     */
    auto translate_subgraph(const ProductDigraph & p, const ArcSet & arcs, FiberAxis axis, int target) -> ArcSet;

    /// Embeds an arc set of a factor into the given fiber.
    auto lift_to_fiber(const ProductDigraph & p, const ArcSet & factor_arcs, FiberAxis axis, int fixed) -> ArcSet;

    /// Image of a product arc set under (i, j) -> (j, i), as arcs of H □ G.
    auto swap_factors(const ProductDigraph & p, const ArcSet & arcs) -> ArcSet;
}

#endif
