/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/flow.hh>

#include <algorithm>
#include <deque>
#include <limits>

using std::to_string;
using std::vector;

namespace arcconn
{
    namespace
    {
        class UnitFlow
        {
            private:
                const Digraph & _d;
                const ArcBits * _blocked;
                vector<char> _flow;
                vector<int> _parent_arc;
                vector<char> _parent_forward;

                auto usable(int arc) const -> bool
                {
                    return ! _blocked || ! _blocked->test(arc);
                }

            public:
                UnitFlow(const Digraph & d, const ArcBits * blocked) :
                    _d(d),
                    _blocked(blocked),
                    _flow(d.size(), 0),
                    _parent_arc(d.order()),
                    _parent_forward(d.order())
                {
                }

                /// Residual reachability from s; returns the visited flags.
                auto residual_reach(Vertex s, Vertex stop_at) -> vector<char>
                {
                    vector<char> seen(_d.order(), 0);
                    std::deque<Vertex> queue{ s };
                    seen[s] = 1;
                    while (! queue.empty()) {
                        Vertex v = queue.front();
                        queue.pop_front();
                        if (v == stop_at)
                            break;
                        for (int a : _d.out_arcs(v)) {
                            Vertex w = _d.arc(a).to;
                            if (! seen[w] && ! _flow[a] && usable(a)) {
                                seen[w] = 1;
                                _parent_arc[w] = a;
                                _parent_forward[w] = 1;
                                queue.push_back(w);
                            }
                        }
                        for (int a : _d.in_arcs(v)) {
                            Vertex w = _d.arc(a).from;
                            if (! seen[w] && _flow[a]) {
                                seen[w] = 1;
                                _parent_arc[w] = a;
                                _parent_forward[w] = 0;
                                queue.push_back(w);
                            }
                        }
                    }
                    return seen;
                }

                auto run(Vertex s, Vertex t, int cap) -> int
                {
                    int value = 0;
                    while (value < cap) {
                        auto seen = residual_reach(s, t);
                        if (! seen[t])
                            break;
                        for (Vertex v = t ; v != s ; ) {
                            int a = _parent_arc[v];
                            if (_parent_forward[v]) {
                                _flow[a] = 1;
                                v = _d.arc(a).from;
                            }
                            else {
                                _flow[a] = 0;
                                v = _d.arc(a).to;
                            }
                        }
                        ++value;
                    }
                    return value;
                }

                auto flow() const -> const vector<char> & { return _flow; }
        };

        /// Splits a unit flow into simple paths, discarding any circulation.
        auto decompose(const Digraph & d, vector<char> flow, Vertex s, Vertex t, int value) -> vector<vector<Vertex>>
        {
            vector<vector<Vertex>> paths;
            for (int k = 0 ; k < value ; ++k) {
                vector<Vertex> walk{ s };
                vector<int> position(d.order(), -1);
                position[s] = 0;
                Vertex v = s;
                while (v != t) {
                    int next = -1;
                    for (int a : d.out_arcs(v))
                        if (flow[a]) {
                            next = a;
                            break;
                        }
                    flow[next] = 0;
                    Vertex w = d.arc(next).to;
                    if (position[w] != -1) {
                        // cut the loop out of the walk
                        for (int i = position[w] + 1 ; i < int(walk.size()) ; ++i)
                            position[walk[i]] = -1;
                        walk.resize(position[w] + 1);
                    }
                    else {
                        position[w] = int(walk.size());
                        walk.push_back(w);
                    }
                    v = w;
                }
                paths.push_back(std::move(walk));
            }
            return paths;
        }
    }

    auto max_flow_unit(const Digraph & d, Vertex s, Vertex t) -> LocalArcConnectivity
    {
        if (s == t)
            throw InvalidInput{ "source and sink must differ" };
        if (s < 0 || s >= d.order() || t < 0 || t >= d.order())
            throw InvalidInput{ "source or sink out of range" };

        UnitFlow flow{ d, nullptr };
        int value = flow.run(s, t, std::numeric_limits<int>::max());

        auto reach = flow.residual_reach(s, -1);
        vector<Arc> cut;
        for (auto & a : d.arcs())
            if (reach[a.from] && ! reach[a.to])
                cut.push_back(a);

        return LocalArcConnectivity{ s, t, value, ArcSet{ std::move(cut) }, decompose(d, flow.flow(), s, t, value) };
    }

    auto max_arc_disjoint_paths(const Digraph & d, Vertex s, Vertex t, const ArcBits & blocked, int cap) -> int
    {
        if (s == t)
            throw InvalidInput{ "source and sink must differ" };
        UnitFlow flow{ d, &blocked };
        return flow.run(s, t, cap);
    }

    auto arc_connectivity(const Digraph & d) -> ConnectivityReport
    {
        if (d.order() < 2)
            throw InvalidInput{ "arc connectivity needs at least 2 vertices" };

        auto deg = degrees(d);
        if (! is_strong(d))
            return ConnectivityReport{ 0, deg.min_out, deg.min_in, ArcSet{}, false };

        ArcBits none(d.size());
        int best = std::numeric_limits<int>::max();
        Vertex best_s = 0, best_t = 1;
        for (Vertex u = 1 ; u < d.order() ; ++u)
            for (auto [s, t] : { std::pair{ 0, u }, std::pair{ u, 0 } }) {
                int value = max_arc_disjoint_paths(d, s, t, none, best);
                if (value < best) {
                    best = value;
                    best_s = s;
                    best_t = t;
                }
            }

        auto local = max_flow_unit(d, best_s, best_t);
        return ConnectivityReport{ local.value, deg.min_out, deg.min_in, std::move(local.cut), true };
    }

    auto verify_cut(const Digraph & d, const ArcSet & cut) -> bool
    {
        return ! is_strong(without_arcs(d, cut));
    }
}
