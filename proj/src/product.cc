/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/product.hh>

#include <optional>

using std::pair;
using std::to_string;
using std::vector;

namespace arcconn
{
    auto cartesian_product(const Digraph & g, const Digraph & h) -> ProductDigraph
    {
        int n = g.order(), m = h.order();
        vector<Arc> arcs;
        arcs.reserve(std::size_t(n) * h.size() + std::size_t(m) * g.size());

        for (auto & a : g.arcs())
            for (int j = 0 ; j < m ; ++j)
                arcs.push_back(Arc{ a.from * m + j, a.to * m + j });

        for (int i = 0 ; i < n ; ++i)
            for (auto & b : h.arcs())
                arcs.push_back(Arc{ i * m + b.from, i * m + b.to });

        return ProductDigraph{ Digraph::from_arc_list(n * m, arcs), n, m };
    }

    auto g_fiber(const ProductDigraph & p, int j) -> FiberRef
    {
        if (j < 0 || j >= p.m())
            throw InvalidInput{ "G-fiber index " + to_string(j) + " out of range" };

        FiberRef result{ FiberAxis::g_fiber, j, {} };
        for (int i = 0 ; i < p.n() ; ++i)
            result.vertices.push_back(p.encode(i, j));
        return result;
    }

    auto h_fiber(const ProductDigraph & p, int i) -> FiberRef
    {
        if (i < 0 || i >= p.n())
            throw InvalidInput{ "H-fiber index " + to_string(i) + " out of range" };

        FiberRef result{ FiberAxis::h_fiber, i, {} };
        for (int j = 0 ; j < p.m() ; ++j)
            result.vertices.push_back(p.encode(i, j));
        return result;
    }

    auto fiber_of_arc(const ProductDigraph & p, Arc a) -> pair<FiberAxis, int>
    {
        if (! p.digraph().has_arc(a))
            throw InvalidInput{ "arc (" + to_string(a.from) + "," + to_string(a.to) + ") is not in the product" };

        auto from = p.decode(a.from), to = p.decode(a.to);
        if (from.j == to.j)
            return { FiberAxis::g_fiber, from.j };
        return { FiberAxis::h_fiber, from.i };
    }

    auto translate_subgraph(const ProductDigraph & p, const ArcSet & arcs, FiberAxis axis, int target) -> ArcSet
    {
        int limit = axis == FiberAxis::g_fiber ? p.m() : p.n();
        if (target < 0 || target >= limit)
            throw InvalidInput{ "target fiber " + to_string(target) + " out of range" };

        std::optional<int> source;
        vector<Arc> result;
        for (auto & a : arcs) {
            auto [arc_axis, fixed] = fiber_of_arc(p, a);
            if (arc_axis != axis)
                throw InvalidInput{ "arc lies in a fiber of the other axis" };
            if (source && *source != fixed)
                throw InvalidInput{ "arcs span more than one fiber" };
            source = fixed;

            auto from = p.decode(a.from), to = p.decode(a.to);
            if (axis == FiberAxis::g_fiber)
                result.push_back(Arc{ p.encode(from.i, target), p.encode(to.i, target) });
            else
                result.push_back(Arc{ p.encode(target, from.j), p.encode(target, to.j) });
        }
        return ArcSet{ std::move(result) };
    }

    auto lift_to_fiber(const ProductDigraph & p, const ArcSet & factor_arcs, FiberAxis axis, int fixed) -> ArcSet
    {
        vector<Arc> result;
        for (auto & a : factor_arcs) {
            Arc lifted = axis == FiberAxis::g_fiber
                ? Arc{ p.encode(a.from, fixed), p.encode(a.to, fixed) }
                : Arc{ p.encode(fixed, a.from), p.encode(fixed, a.to) };
            if (! p.digraph().has_arc(lifted))
                throw InvalidInput{ "factor arc (" + to_string(a.from) + "," + to_string(a.to) + ") is not in the factor" };
            result.push_back(lifted);
        }
        return ArcSet{ std::move(result) };
    }

    auto swap_factors(const ProductDigraph & p, const ArcSet & arcs) -> ArcSet
    {
        vector<Arc> result;
        for (auto & a : arcs) {
            auto from = p.decode(a.from), to = p.decode(a.to);
            result.push_back(Arc{ from.j * p.n() + from.i, to.j * p.n() + to.i });
        }
        return ArcSet{ std::move(result) };
    }
}
