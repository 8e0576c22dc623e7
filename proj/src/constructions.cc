/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/constructions.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace arcconn
{
    using std::to_string;

    auto to_string(FormulaTerm t) -> string
    {
        switch (t) {
            case FormulaTerm::lambda_g_times_order_h: return "lambda(G)|H|";
            case FormulaTerm::lambda_h_times_order_g: return "lambda(H)|G|";
            case FormulaTerm::out_degree_sum:         return "d+(G)+d+(H)";
            case FormulaTerm::in_degree_sum:          return "d-(G)+d-(H)";
        }
        return "?";
    }

    auto to_string(LiftCase c) -> string
    {
        switch (c) {
            case LiftCase::shared_h_fiber: return "case 1 (shared H-fiber)";
            case LiftCase::shared_g_fiber: return "case 1 (shared G-fiber)";
            case LiftCase::subcase_2_1:    return "subcase 2.1";
            case LiftCase::subcase_2_2:    return "subcase 2.2";
            case LiftCase::subcase_2_3:    return "subcase 2.3";
        }
        return "?";
    }

    auto to_string(DigraphClass c) -> string
    {
        switch (c) {
            case DigraphClass::dicycle:    return "dicycle";
            case DigraphClass::bicycle:    return "bicycle";
            case DigraphClass::bitree:     return "bitree";
            case DigraphClass::bicomplete: return "bicomplete";
        }
        return "?";
    }

    auto to_string(PropRouting r) -> string
    {
        switch (r) {
            case PropRouting::figure:  return "figure";
            case PropRouting::general: return "general";
            case PropRouting::solver:  return "solver";
        }
        return "?";
    }

    namespace
    {
        auto require_strong_factor(const Digraph & d, const char * name) -> void
        {
            if (d.order() < 2)
                throw InvalidInput{ string{ name } + " must have at least 2 vertices" };
            if (! is_strong(d))
                throw InvalidInput{ string{ name } + " must be strong" };
        }
    }

    auto product_lambda_formula(const Digraph & g, const Digraph & h) -> FormulaBreakdown
    {
        require_strong_factor(g, "G");
        require_strong_factor(h, "H");

        auto dg = degrees(g), dh = degrees(h);
        FormulaBreakdown result{
            arc_connectivity(g).lambda * h.order(),
            arc_connectivity(h).lambda * g.order(),
            dg.min_out + dh.min_out,
            dg.min_in + dh.min_in,
            0,
            FormulaTerm::lambda_g_times_order_h
        };

        pair<int, FormulaTerm> terms[] = {
            { result.lambda_g_times_order_h, FormulaTerm::lambda_g_times_order_h },
            { result.lambda_h_times_order_g, FormulaTerm::lambda_h_times_order_g },
            { result.out_degree_sum, FormulaTerm::out_degree_sum },
            { result.in_degree_sum, FormulaTerm::in_degree_sum }
        };
        result.value = std::numeric_limits<int>::max();
        for (auto [value, term] : terms)
            if (value < result.value) {
                result.value = value;
                result.argmin = term;
            }
        return result;
    }

    auto undirected_product_lambda(const UndirectedGraph & g, const UndirectedGraph & h) -> int
    {
        if (g.order() < 2 || h.order() < 2)
            throw InvalidInput{ "both graphs need at least 2 vertices" };
        if (! g.is_connected() || ! h.is_connected())
            throw InvalidInput{ "both graphs must be connected" };

        // edge-connectivity of Q equals the arc-strong connectivity of its biorientation
        int lambda_g = arc_connectivity(biorient(g)).lambda, lambda_h = arc_connectivity(biorient(h)).lambda;
        return std::min({ lambda_g * h.order(), lambda_h * g.order(), g.min_degree() + h.min_degree() });
    }

    auto check_theorem31(const Digraph & g, const Digraph & h) -> Theorem31Check
    {
        auto formula = product_lambda_formula(g, h);
        auto product = cartesian_product(g, h);
        auto observed = arc_connectivity(product.digraph());
        bool cut_ok = observed.strong && int(observed.min_cut.size()) == observed.lambda && verify_cut(product.digraph(), observed.min_cut);
        return Theorem31Check{ formula, observed, cut_ok, cut_ok && observed.lambda == formula.value };
    }

    namespace
    {
        auto least_out_neighbour(const ArcSet & member, Vertex v) -> Vertex
        {
            for (auto & a : member)
                if (a.from == v)
                    return a.to;   // sorted, so the first hit is the least head
            throw ConstructionError{ "fiber certificate member has no out-arc at the anchor" };
        }

        auto exact_members(const Digraph & d, Vertex u, Vertex v) -> vector<ArcSet>
        {
            auto result = lambda_s_exact(d, SeedPair{ u, v });
            if (result.value == 0)
                throw ConstructionError{ "factor has no strong subgraph through the seed pair" };
            return result.witness.members;
        }

        /// Seeds in one H-fiber: x = (a, b), y = (a, d).
        auto lift_shared_h_fiber(const ProductDigraph & p, const Digraph & g, const Digraph & h, ProductVertex x, ProductVertex y) -> vector<ArcSet>
        {
            int a = x.i, b = x.j, d = y.j;
            auto h_members = exact_members(h, b, d);
            auto g_members = exact_members(g, a, a == 0 ? 1 : 0);

            vector<ArcSet> family;
            for (auto & member : h_members)
                family.push_back(lift_to_fiber(p, member, FiberAxis::h_fiber, a));

            for (auto & member : g_members) {
                Vertex t = least_out_neighbour(member, a);
                family.push_back(lift_to_fiber(p, member, FiberAxis::g_fiber, b)
                        .united(lift_to_fiber(p, h_members.front(), FiberAxis::h_fiber, t))
                        .united(lift_to_fiber(p, member, FiberAxis::g_fiber, d)));
            }
            return family;
        }
    }

    auto lift_certificates(const Digraph & g, const Digraph & h, SeedPair s) -> LiftResult
    {
        require_strong_factor(g, "G");
        require_strong_factor(h, "H");

        auto p = cartesian_product(g, h);
        SeedPair::checked(s.x, s.y, p.digraph().order());
        auto x = p.decode(s.x), y = p.decode(s.y);

        auto finish = [&] (vector<ArcSet> members, LiftCase kind, bool allow_drop) -> LiftResult {
            CertificateFamily family{ s, std::move(members) };
            auto report = verify_certificate(p.digraph(), family);
            bool dropped = false;
            if (! report.valid && allow_drop && ! report.overlaps.empty()) {
                family.members.erase(family.members.begin() + report.overlaps.front().second);
                dropped = true;
                report = verify_certificate(p.digraph(), family);
            }
            if (! report.valid)
                throw ConstructionError{ "lifted family does not verify: " + report.describe() };
            return LiftResult{ p, std::move(family), kind, dropped };
        };

        if (x.i == y.i)
            return finish(lift_shared_h_fiber(p, g, h, x, y), LiftCase::shared_h_fiber, false);

        if (x.j == y.j) {
            // same construction on H □ G, mapped back through (j, i) -> (i, j)
            auto q = cartesian_product(h, g);
            auto swapped = lift_shared_h_fiber(q, h, g, ProductVertex{ x.j, x.i }, ProductVertex{ y.j, y.i });
            vector<ArcSet> members;
            for (auto & m : swapped)
                members.push_back(swap_factors(q, m));
            return finish(std::move(members), LiftCase::shared_g_fiber, false);
        }

        // general position: x = (a, b), y = (c, d) with a != c, b != d
        int a = x.i, b = x.j, c = y.i, d = y.j;
        auto g_members = exact_members(g, a, c);
        auto h_members = exact_members(h, b, d);

        vector<Vertex> t(g_members.size()), t_prime(h_members.size());
        optional<size_t> hits_c, hits_d;
        for (size_t i = 0 ; i < g_members.size() ; ++i) {
            t[i] = least_out_neighbour(g_members[i], a);
            if (t[i] == c)
                hits_c = i;
        }
        for (size_t j = 0 ; j < h_members.size() ; ++j) {
            t_prime[j] = least_out_neighbour(h_members[j], b);
            if (t_prime[j] == d)
                hits_d = j;
        }

        LiftCase kind = (hits_c && hits_d) ? LiftCase::subcase_2_3
            : (hits_c || hits_d) ? LiftCase::subcase_2_2 : LiftCase::subcase_2_1;

        vector<ArcSet> family;
        for (size_t i = 0 ; i < g_members.size() ; ++i) {
            auto first = lift_to_fiber(p, g_members[i], FiberAxis::g_fiber, b);
            if (kind == LiftCase::subcase_2_3 && i == *hits_c) {
                // x -> (c, b) in G(v_b), then up H(u_c) to y using the member freed below
                family.push_back(first.united(lift_to_fiber(p, h_members[*hits_d], FiberAxis::h_fiber, c)));
                continue;
            }
            family.push_back(first
                    .united(lift_to_fiber(p, h_members.front(), FiberAxis::h_fiber, t[i]))
                    .united(lift_to_fiber(p, g_members[i], FiberAxis::g_fiber, d)));
        }
        for (size_t j = 0 ; j < h_members.size() ; ++j) {
            auto first = lift_to_fiber(p, h_members[j], FiberAxis::h_fiber, a);
            if (kind == LiftCase::subcase_2_3 && j == *hits_d) {
                // x -> (a, d) in H(u_a), then along G(v_d) to y using the copy the rerouted member left
                family.push_back(first.united(lift_to_fiber(p, g_members[*hits_c], FiberAxis::g_fiber, d)));
                continue;
            }
            family.push_back(first
                    .united(lift_to_fiber(p, g_members.front(), FiberAxis::g_fiber, t_prime[j]))
                    .united(lift_to_fiber(p, h_members[j], FiberAxis::h_fiber, c)));
        }

        return finish(std::move(family), kind, kind == LiftCase::subcase_2_2);
    }

    auto min_order(DigraphClass c) -> int
    {
        switch (c) {
            case DigraphClass::dicycle:    return 3;
            case DigraphClass::bicycle:    return 3;
            case DigraphClass::bitree:     return 2;
            case DigraphClass::bicomplete: return 2;
        }
        return 2;
    }

    auto class_digraph(DigraphClass c, int order, TreeShape shape) -> Digraph
    {
        if (order < min_order(c))
            throw InvalidInput{ to_string(c) + " needs order at least " + to_string(min_order(c)) };
        switch (c) {
            case DigraphClass::dicycle:    return directed_cycle(order);
            case DigraphClass::bicycle:    return bidirected_cycle(order);
            case DigraphClass::bitree:     shape.order = order; return bidirected_tree(shape);
            case DigraphClass::bicomplete: return complete_digraph(order);
        }
        throw InvalidInput{ "unknown digraph class" };
    }

    auto prop_cardinality(DigraphClass second, int m) -> int
    {
        switch (second) {
            case DigraphClass::dicycle:    return 2;
            case DigraphClass::bicycle:    return 3;
            case DigraphClass::bitree:     return 2;
            case DigraphClass::bicomplete: return m;
        }
        return 0;
    }

    namespace
    {
        /**
         * Collects closed walks in product coordinates. Rows index the
         * directed cycle factor; a G-step is (i, j) -> (i+1 mod n, j).
         */
        class WalkBuilder
        {
            private:
                const ProductDigraph & _p;
                vector<Arc> _arcs;
                ProductVertex _at;

            public:
                WalkBuilder(const ProductDigraph & p, ProductVertex start) : _p(p), _at(start) { }

                auto to(ProductVertex next) -> WalkBuilder &
                {
                    Arc a{ _p.encode(_at), _p.encode(next) };
                    if (! _p.digraph().has_arc(a))
                        throw ConstructionError{ "routing step (" + to_string(_at.i) + "," + to_string(_at.j) + ") -> ("
                            + to_string(next.i) + "," + to_string(next.j) + ") is not an arc" };
                    _arcs.push_back(a);
                    _at = next;
                    return *this;
                }

                /// Forward along the directed cycle until row target.
                auto down_to(int target_row) -> WalkBuilder &
                {
                    do
                        to(ProductVertex{ (_at.i + 1) % _p.n(), _at.j });
                    while (_at.i != target_row);
                    return *this;
                }

                /// Through the given columns in order, staying in this row.
                auto across(const vector<int> & columns) -> WalkBuilder &
                {
                    for (int col : columns)
                        if (col != _at.j)
                            to(ProductVertex{ _at.i, col });
                    return *this;
                }

                auto arcs() const -> ArcSet { return ArcSet{ _arcs }; }
        };

        auto reversed(vector<int> v) -> vector<int>
        {
            std::reverse(v.begin(), v.end());
            return v;
        }

        /// Columns from `from` to `to` stepping by +1 mod m.
        auto forward_columns(int from, int to, int m) -> vector<int>
        {
            vector<int> result{ from };
            while (result.back() != to)
                result.push_back((result.back() + 1) % m);
            return result;
        }

        auto tree_path(const Digraph & tree, Vertex from, Vertex to) -> vector<int>
        {
            vector<int> parent(tree.order(), -1);
            std::deque<Vertex> queue{ from };
            parent[from] = from;
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop_front();
                for (int a : tree.out_arcs(v)) {
                    Vertex w = tree.arc(a).to;
                    if (parent[w] == -1) {
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            vector<int> path{ to };
            while (path.back() != from)
                path.push_back(parent[path.back()]);
            return reversed(path);
        }

        /// Two members: forward along column b then back, and the mirror image.
        auto two_way_routing(const ProductDigraph & p, int r0, int r, const vector<int> & path_bd) -> vector<ArcSet>
        {
            int b = path_bd.front(), d = path_bd.back();
            auto back = reversed(path_bd);

            WalkBuilder first{ p, { r0, b } };
            first.down_to(r).across(path_bd).down_to(r0).across(back);

            WalkBuilder second{ p, { r0, b } };
            second.across(path_bd).down_to(r).across(back).down_to(r0);

            (void) d;
            return { first.arcs(), second.arcs() };
        }

        auto routing_dicycle(const ProductDigraph & p, ProductVertex x, ProductVertex y) -> pair<vector<ArcSet>, bool>
        {
            int n = p.n(), m = p.m();
            int r = (y.i - x.i + n) % n, q = (y.j - x.j + m) % m;
            auto at = [&] (int i, int j) { return ProductVertex{ (x.i + i) % n, (x.j + j) % m }; };
            auto col = [&] (int j) { return (x.j + j) % m; };
            auto row = [&] (int i) { return (x.i + i) % n; };

            if (r <= n - 2 && q <= m - 2) {
                int s = n - 2 > r ? n - 2 : n - 1;

                WalkBuilder first{ p, at(0, 0) };
                first.across(forward_columns(col(0), col(q), m)).down_to(row(r))
                    .across(forward_columns(col(q), col(m - 1), m)).down_to(row(0)).to(at(0, 0));

                WalkBuilder second{ p, at(0, 0) };
                second.down_to(row(r)).across(forward_columns(col(0), col(q), m)).down_to(row(s))
                    .across(forward_columns(col(q), col(0), m)).down_to(row(0));

                return { { first.arcs(), second.arcs() }, r == 1 && q == 1 };
            }

            // row 0 cycle with column q cycle, column 0 cycle with row r cycle
            WalkBuilder first{ p, at(0, 0) };
            first.across(forward_columns(col(0), col(q), m)).down_to(row(0))
                .across(forward_columns(col(q), col(0), m));

            WalkBuilder second{ p, at(0, 0) };
            second.down_to(row(r)).across(forward_columns(col(0), col(0), m));
            for (int j = 1 ; j <= m ; ++j)
                second.to(at(r, j % m));
            second.down_to(row(0));

            return { { first.arcs(), second.arcs() }, false };
        }

        auto routing_bicycle(const ProductDigraph & p, ProductVertex x, ProductVertex y) -> pair<vector<ArcSet>, bool>
        {
            int n = p.n(), m = p.m();
            int r = (y.i - x.i + n) % n, q = (y.j - x.j + m) % m;
            auto col = [&] (int j) { return ((x.j + j) % m + m) % m; };
            auto row = [&] (int i) { return (x.i + i) % n; };

            // two sides of the cycle between columns 0 and q; `other` has an interior vertex
            vector<int> side, other;
            if (q < m - 1) {
                for (int j = 0 ; j <= q ; ++j)
                    side.push_back(col(j));
                for (int j = 0 ; j >= q - m ; --j)
                    other.push_back(col(j));
            }
            else {
                side = { col(0), col(m - 1) };
                for (int j = 0 ; j <= q ; ++j)
                    other.push_back(col(j));
            }
            int e = other[1];
            auto to_e = vector<int>(other.begin(), other.begin() + 2);
            auto e_to_q = vector<int>(other.begin() + 1, other.end());

            WalkBuilder first{ p, { row(0), col(0) } };
            first.across(side).down_to(row(0)).across(reversed(side));

            WalkBuilder second{ p, { row(0), col(0) } };
            second.across(to_e).down_to(row(r)).across(e_to_q).across(reversed(e_to_q)).down_to(row(0)).across(reversed(to_e));

            WalkBuilder third{ p, { row(0), col(0) } };
            third.down_to(row(r)).across(side).across(reversed(side)).down_to(row(0));

            (void) e;
            return { { first.arcs(), second.arcs(), third.arcs() }, r == 1 && q == 1 };
        }

        auto routing_bitree(const ProductDigraph & p, const Digraph & tree, ProductVertex x, ProductVertex y) -> pair<vector<ArcSet>, bool>
        {
            auto path = tree_path(tree, x.j, y.j);
            bool drawn = (y.i - x.i + p.n()) % p.n() == 1 && path.size() == 2;
            return { two_way_routing(p, x.i, y.i, path), drawn };
        }

        auto routing_bicomplete(const ProductDigraph & p, ProductVertex x, ProductVertex y) -> pair<vector<ArcSet>, bool>
        {
            int n = p.n(), m = p.m();
            bool drawn = (y.i - x.i + n) % n == 1;
            if (m == 2)
                return { two_way_routing(p, x.i, y.i, { x.j, y.j }), drawn };

            // columns relabelled so that x sits in column 0 and y in column 1
            vector<int> cols{ x.j, y.j };
            for (int j = 0 ; j < m ; ++j)
                if (j != x.j && j != y.j)
                    cols.push_back(j);
            int r0 = x.i, r = y.i;

            vector<ArcSet> family;

            WalkBuilder first{ p, { r0, cols[0] } };
            first.to({ r0, cols[1] }).down_to(r0).to({ r0, cols[0] });
            family.push_back(first.arcs());

            WalkBuilder second{ p, { r0, cols[0] } };
            second.down_to(r).to({ r, cols[1] }).to({ r, cols[0] }).down_to(r0);
            family.push_back(second.arcs());

            for (int k = 2 ; k < m ; ++k) {
                WalkBuilder member{ p, { r0, cols[0] } };
                member.to({ r0, cols[k] }).down_to(r).to({ r, cols[1] }).to({ r, cols[k] }).down_to(r0).to({ r0, cols[0] });
                family.push_back(member.arcs());
            }
            return { family, drawn };
        }
    }

    auto prop_certificates(DigraphClass second, int n, int m, SeedPair s, TreeShape shape) -> PropCertificate
    {
        if (n < 3)
            throw InvalidInput{ "the directed cycle factor needs order at least 3" };

        auto g = directed_cycle(n);
        auto h = class_digraph(second, m, shape);
        auto p = cartesian_product(g, h);
        SeedPair::checked(s.x, s.y, p.digraph().order());
        auto x = p.decode(s.x), y = p.decode(s.y);
        int cardinality = prop_cardinality(second, m);

        vector<ArcSet> members;
        PropRouting routing;
        if (x.i == y.i || x.j == y.j) {
            auto exact = lambda_s_exact(p.digraph(), s);
            if (exact.value < cardinality)
                throw ConstructionError{ "exact search found only " + to_string(exact.value) + " members, expected " + to_string(cardinality) };
            members.assign(exact.witness.members.begin(), exact.witness.members.begin() + cardinality);
            routing = PropRouting::solver;
        }
        else {
            pair<vector<ArcSet>, bool> built;
            switch (second) {
                case DigraphClass::dicycle:    built = routing_dicycle(p, x, y); break;
                case DigraphClass::bicycle:    built = routing_bicycle(p, x, y); break;
                case DigraphClass::bitree:     built = routing_bitree(p, h, x, y); break;
                case DigraphClass::bicomplete: built = routing_bicomplete(p, x, y); break;
            }
            members = std::move(built.first);
            routing = built.second ? PropRouting::figure : PropRouting::general;
        }

        CertificateFamily family{ s, std::move(members) };
        auto report = verify_certificate(p.digraph(), family);
        if (! report.valid)
            throw ConstructionError{ "closed-form family does not verify: " + report.describe() };
        if (int(family.members.size()) != cardinality)
            throw ConstructionError{ "closed-form family has " + to_string(family.members.size()) + " members, expected " + to_string(cardinality) };

        return PropCertificate{ std::move(p), std::move(family), routing };
    }

    auto table1_value(DigraphClass row, DigraphClass column, int n, int m) -> int
    {
        if (n < min_order(row) || m < min_order(column))
            throw InvalidInput{ "order below the class minimum" };

        // bidirected cycles add 1 over the base 2; a complete digraph replaces its side's share
        auto share = [] (DigraphClass c, int order) {
            switch (c) {
                case DigraphClass::dicycle:    return 1;
                case DigraphClass::bicycle:    return 2;
                case DigraphClass::bitree:     return 1;
                case DigraphClass::bicomplete: return order - 1;
            }
            return 0;
        };
        return share(row, n) + share(column, m);
    }

    auto check_bounds(const Digraph & g, const Digraph & h, bool compute_exact) -> BoundsReport
    {
        auto upper = product_lambda_formula(g, h);
        int lg = lambda_2(g).value, lh = lambda_2(h).value;

        BoundsReport report{ lg, lh, lg + lh - 1, upper, std::nullopt };
        if (compute_exact) {
            int observed = lambda_2(cartesian_product(g, h).digraph()).value;
            report.observed = observed;
            report.lower_tight = observed == report.lower;
            report.upper_tight = observed == upper.value;
        }
        return report;
    }

    auto random_strong_pair(RngSeed seed, int min_order, int max_order) -> pair<Digraph, Digraph>
    {
        if (min_order < 2 || max_order < min_order)
            throw InvalidInput{ "factor orders must satisfy 2 <= min <= max" };

        Rng rng{ seed };
        int ng = rng.between(min_order, max_order), nh = rng.between(min_order, max_order);
        double pg = 0.7 * rng.real(), ph = 0.7 * rng.real();
        RngSeed sg = rng.below(std::numeric_limits<std::uint64_t>::max()), sh = rng.below(std::numeric_limits<std::uint64_t>::max());
        return { random_strong_digraph(ng, pg, sg), random_strong_digraph(nh, ph, sh) };
    }

    auto hunt_tightness(const HuntConfig & config, int trials, RngSeed seed) -> HuntReport
    {
        HuntReport report;

        vector<std::tuple<string, Digraph, Digraph>> instances;
        Rng rng{ seed };
        for (int t = 0 ; t < trials ; ++t) {
            RngSeed trial_seed = rng.below(std::numeric_limits<std::uint64_t>::max());
            auto [g, h] = random_strong_pair(trial_seed, config.min_order, config.max_order);
            instances.emplace_back("random#" + to_string(t) + " seed=" + to_string(trial_seed), std::move(g), std::move(h));
        }
        if (config.include_class_pairs) {
            constexpr DigraphClass all[] = { DigraphClass::dicycle, DigraphClass::bicycle, DigraphClass::bitree, DigraphClass::bicomplete };
            for (auto row : all)
                for (auto column : all)
                    instances.emplace_back(to_string(row) + "(3) x " + to_string(column) + "(3)",
                            class_digraph(row, 3), class_digraph(column, 3));
        }

        for (auto & [label, g, h] : instances) {
            HuntTrial trial{ label, g, h, check_bounds(g, h, true) };
            if (! trial.bounds.sandwiched())
                report.all_sandwiched = false;
            ++report.gap_histogram[*trial.bounds.observed - trial.bounds.lower];

            if (trial.bounds.lower_tight)
                report.witnesses.push_back(HuntWitness{ trial, lambda_2(cartesian_product(g, h).digraph()), lambda_2(g), lambda_2(h) });
            report.trials.push_back(std::move(trial));
        }
        return report;
    }
}
