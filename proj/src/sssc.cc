/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/arc_bits.hh>
#include <arcconn/flow.hh>
#include <arcconn/sssc.hh>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace arcconn
{
    auto SeedPair::checked(Vertex x, Vertex y, int order) -> SeedPair
    {
        if (x < 0 || x >= order || y < 0 || y >= order)
            throw InvalidInput{ "seed vertex out of range" };
        if (x == y)
            throw InvalidInput{ "seed vertices must be distinct" };
        return SeedPair{ x, y };
    }

    auto VerificationReport::describe() const -> string
    {
        if (valid)
            return "valid";

        std::ostringstream out;
        if (! seed_valid)
            out << "seed pair is not two distinct vertices of the digraph\n";
        for (size_t i = 0 ; i < members.size() ; ++i) {
            if (! members[i].arcs_in_host)
                out << "member " << i << ": contains arcs not in the digraph\n";
            if (! members[i].strong)
                out << "member " << i << ": not strong\n";
            if (! members[i].contains_seed)
                out << "member " << i << ": does not contain both seed vertices\n";
        }
        for (auto & o : overlaps) {
            out << "members " << o.first << " and " << o.second << " share";
            for (auto & a : o.shared)
                out << " (" << a.from << "," << a.to << ")";
            out << '\n';
        }
        return out.str();
    }

    auto verify_certificate(const Digraph & d, const CertificateFamily & cert) -> VerificationReport
    {
        VerificationReport report;
        auto [x, y] = cert.seed;
        report.seed_valid = x != y && x >= 0 && x < d.order() && y >= 0 && y < d.order();

        for (auto & member : cert.members) {
            MemberReport m;
            m.arcs_in_host = std::all_of(member.begin(), member.end(), [&] (const Arc & a) { return d.has_arc(a); });
            m.contains_seed = report.seed_valid && std::any_of(member.begin(), member.end(), [&] (const Arc & a) { return a.from == x || a.to == x; })
                && std::any_of(member.begin(), member.end(), [&] (const Arc & a) { return a.from == y || a.to == y; });
            m.strong = false;
            if (m.arcs_in_host && ! member.empty()) {
                Vertex anchor = member.begin()->from;
                Vertex single[1] = { anchor };
                m.strong = arc_subset_spanning_check(d, member, single);
            }
            report.members.push_back(m);
        }

        for (size_t i = 0 ; i < cert.members.size() ; ++i)
            for (size_t j = i + 1 ; j < cert.members.size() ; ++j) {
                auto shared = cert.members[i].intersection(cert.members[j]);
                if (! shared.empty())
                    report.overlaps.push_back(Overlap{ int(i), int(j), std::move(shared) });
            }

        report.valid = report.seed_valid && report.overlaps.empty()
            && std::all_of(report.members.begin(), report.members.end(), [] (const MemberReport & m) { return m.valid(); });
        return report;
    }

    auto to_string(OptimalityReason r) -> string
    {
        switch (r) {
            case OptimalityReason::unreachable:              return "seed vertices not mutually reachable";
            case OptimalityReason::degree_bound:             return "degree bound attained";
            case OptimalityReason::local_connectivity_bound: return "local arc-connectivity bound attained";
            case OptimalityReason::exhaustive_search:        return "next value refuted by exhaustive search";
            case OptimalityReason::budget_exhausted:         return "search budget exhausted";
        }
        return "?";
    }

    namespace
    {
        struct BoundDetail
        {
            int value;
            int degree_part;
            int flow_part;
        };

        auto upper_bound_detail(const Digraph & d, SeedPair s) -> BoundDetail
        {
            int degree_part = std::min({ d.out_degree(s.x), d.in_degree(s.x), d.out_degree(s.y), d.in_degree(s.y) });
            ArcBits none(d.size());
            int flow_part = std::min(
                    max_arc_disjoint_paths(d, s.x, s.y, none, degree_part),
                    max_arc_disjoint_paths(d, s.y, s.x, none, degree_part));
            return BoundDetail{ std::min(degree_part, flow_part), degree_part, flow_part };
        }

        /**
         * Simple from-to paths avoiding blocked arcs and the vertex `avoid`,
         * shortest first and in lexicographic order of vertex sequence within
         * one length. The callback gets the arc indices and returns true to
         * stop.
         */
        template <typename F_>
        auto for_each_short_path(const Digraph & d, Vertex from, Vertex to, const ArcBits & blocked, Vertex avoid, F_ && f) -> bool
        {
            constexpr int unreachable = std::numeric_limits<int>::max() / 2;
            vector<int> dist(d.order(), unreachable);
            std::deque<Vertex> queue{ to };
            dist[to] = 0;
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop_front();
                for (int a : d.in_arcs(v)) {
                    Vertex u = d.arc(a).from;
                    if (dist[u] == unreachable && u != avoid && ! blocked.test(a)) {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            if (dist[from] == unreachable)
                return false;

            vector<char> on_path(d.order(), 0);
            vector<int> arcs;
            on_path[from] = 1;

            bool stopped = false;
            auto dfs = [&] (auto & self, Vertex v, int length) -> void {
                for (int a : d.out_arcs(v)) {
                    if (stopped)
                        return;
                    if (blocked.test(a))
                        continue;
                    Vertex w = d.arc(a).to;
                    if (on_path[w] || int(arcs.size()) + 1 + dist[w] > length)
                        continue;
                    arcs.push_back(a);
                    if (w == to) {
                        if (int(arcs.size()) == length)
                            stopped = f(span<const int>{ arcs });
                    }
                    else {
                        on_path[w] = 1;
                        self(self, w, length);
                        on_path[w] = 0;
                    }
                    arcs.pop_back();
                }
            };

            for (int length = dist[from] ; length < d.order() && ! stopped ; ++length)
                dfs(dfs, from, length);
            return stopped;
        }

        /// As above, but every path uses `pinned`, which leaves `from` or enters `to`.
        template <typename F_>
        auto for_each_pinned_path(const Digraph & d, Vertex from, Vertex to, const ArcBits & blocked, int pinned, F_ && f) -> bool
        {
            Arc e = d.arc(pinned);
            if (e.from == from && e.to == to) {
                int only[1] = { pinned };
                return f(span<const int>{ only });
            }

            vector<int> joined;
            if (e.from == from)
                return for_each_short_path(d, e.to, to, blocked, from, [&] (span<const int> rest) -> bool {
                        joined.assign(1, pinned);
                        joined.insert(joined.end(), rest.begin(), rest.end());
                        return f(span<const int>{ joined });
                        });
            return for_each_short_path(d, from, e.from, blocked, to, [&] (span<const int> rest) -> bool {
                    joined.assign(rest.begin(), rest.end());
                    joined.push_back(pinned);
                    return f(span<const int>{ joined });
                    });
        }

        struct MemoKey
        {
            ArcBits blocked;
            int remaining;

            auto operator== (const MemoKey &) const -> bool = default;
        };

        struct MemoKeyHash
        {
            auto operator() (const MemoKey & k) const -> size_t
            {
                return ArcBitsHash{}(k.blocked) ^ (size_t(k.remaining) * 0x9e3779b97f4a7c15ULL);
            }
        };

        /**
         * Decides whether `target` arc-disjoint {x,y}-strong subgraphs exist.
         * Every member is some P u Q and so uses exactly one out-arc and one
         * in-arc at each of x and y. Each step takes the tightest of those
         * four arc groups and branches on its lowest free arc: either some
         * member uses it, or (if the group has slack) nothing does.
         */
        class PackingSearch
        {
            private:
                static constexpr size_t memo_limit = 2'000'000;
                static constexpr size_t dominance_limit = 4096;

                enum class Role { x_out, x_in, y_in, y_out };

                const Digraph & _d;
                Vertex _x, _y;
                optional<uint64_t> _node_limit;
                uint64_t _nodes = 0;
                bool _exhausted = false;

                vector<ArcBits> _current, _best_partial;
                std::unordered_set<MemoKey, MemoKeyHash> _failed;

                auto free_arcs(span<const int> arcs, const ArcBits & blocked, int & count, int & lowest) const -> void
                {
                    count = 0;
                    lowest = -1;
                    for (int a : arcs)
                        if (! blocked.test(a)) {
                            if (lowest == -1 || a < lowest)
                                lowest = a;
                            ++count;
                        }
                }

                /// Calls f with each candidate member containing the pivot; f returns true to stop.
                template <typename F_>
                auto for_each_member(const ArcBits & blocked, Role role, int pivot, F_ && f) -> void
                {
                    auto with_q = [&] (const ArcBits & p_bits) -> bool {
                        auto take_q = [&] (span<const int> q) -> bool {
                            ArcBits member = p_bits;
                            for (int a : q)
                                member.set(a);
                            return f(std::move(member));
                        };
                        if (role == Role::x_in || role == Role::y_out)
                            return for_each_pinned_path(_d, _y, _x, blocked, pivot, take_q);
                        return for_each_short_path(_d, _y, _x, blocked, -1, take_q);
                    };

                    auto take_p = [&] (span<const int> p) -> bool {
                        ArcBits p_bits(_d.size());
                        for (int a : p)
                            p_bits.set(a);
                        return with_q(p_bits);
                    };
                    if (role == Role::x_out || role == Role::y_in)
                        for_each_pinned_path(_d, _x, _y, blocked, pivot, take_p);
                    else
                        for_each_short_path(_d, _x, _y, blocked, -1, take_p);
                }

                auto search(const ArcBits & blocked, int remaining) -> bool
                {
                    if (remaining == 0)
                        return true;

                    if (_node_limit && _nodes >= *_node_limit) {
                        _exhausted = true;
                        return false;
                    }
                    ++_nodes;

                    MemoKey key{ blocked, remaining };
                    if (_failed.contains(key))
                        return false;

                    std::pair<Role, span<const int>> groups[] = {
                        { Role::x_out, _d.out_arcs(_x) }, { Role::x_in, _d.in_arcs(_x) },
                        { Role::y_in, _d.in_arcs(_y) }, { Role::y_out, _d.out_arcs(_y) } };

                    Role role = Role::x_out;
                    int pivot = -1, slack = std::numeric_limits<int>::max();
                    for (auto & [r, arcs] : groups) {
                        int count, lowest;
                        free_arcs(arcs, blocked, count, lowest);
                        if (count < remaining) {
                            remember_failure(std::move(key));
                            return false;
                        }
                        if (count - remaining < slack) {
                            slack = count - remaining;
                            role = r;
                            pivot = lowest;
                        }
                    }

                    if (max_arc_disjoint_paths(_d, _x, _y, blocked, remaining) < remaining
                            || max_arc_disjoint_paths(_d, _y, _x, blocked, remaining) < remaining) {
                        remember_failure(std::move(key));
                        return false;
                    }

                    // members already tried here; a superset of one of them cannot do better
                    vector<ArcBits> tried;
                    bool found = false;

                    for_each_member(blocked, role, pivot, [&] (ArcBits member) -> bool {
                        for (auto & earlier : tried)
                            if (earlier.is_subset_of(member))
                                return false;
                        if (tried.size() < dominance_limit)
                            tried.push_back(member);

                        _current.push_back(member);
                        if (_current.size() > _best_partial.size())
                            _best_partial = _current;

                        if (search(blocked | member, remaining - 1)) {
                            found = true;
                            return true;
                        }
                        _current.pop_back();
                        return _exhausted;
                    });

                    if (! found && ! _exhausted && slack > 0) {
                        ArcBits without_pivot = blocked;
                        without_pivot.set(pivot);
                        found = search(without_pivot, remaining);
                    }

                    if (! found && ! _exhausted)
                        remember_failure(std::move(key));
                    return found;
                }

                auto remember_failure(MemoKey && key) -> void
                {
                    if (_failed.size() >= memo_limit)
                        _failed.clear();
                    _failed.insert(std::move(key));
                }

            public:
                PackingSearch(const Digraph & d, SeedPair s, optional<uint64_t> node_limit) :
                    _d(d), _x(s.x), _y(s.y), _node_limit(node_limit)
                {
                }

                auto run(int target) -> bool
                {
                    _current.clear();
                    _failed.clear();
                    return search(ArcBits(_d.size()), target);
                }

                auto exhausted() const -> bool { return _exhausted; }
                auto nodes() const -> uint64_t { return _nodes; }
                auto current() const -> const vector<ArcBits> & { return _current; }
                auto best_partial() const -> const vector<ArcBits> & { return _best_partial; }
        };

        auto to_family(const Digraph & d, SeedPair s, const vector<ArcBits> & members, size_t keep) -> CertificateFamily
        {
            CertificateFamily result{ s, {} };
            for (size_t i = 0 ; i < members.size() && i < keep ; ++i)
                result.members.push_back(to_arc_set(d, members[i]));
            return result;
        }

        /// Largest k <= start with a packing, reusing partial packings found on the way down.
        auto descend(const Digraph & d, SeedPair s, int start, optional<uint64_t> node_limit,
                vector<ArcBits> known) -> LambdaResult
        {
            uint64_t nodes = 0;
            for (int k = start ; k >= 1 ; --k) {
                if (int(known.size()) >= k)
                    return LambdaResult{ k, to_family(d, s, known, k), OptimalityReason::exhaustive_search, true, k, nodes };

                optional<uint64_t> remaining_budget;
                if (node_limit)
                    remaining_budget = *node_limit > nodes ? *node_limit - nodes : 0;

                PackingSearch search{ d, s, remaining_budget };
                bool found = search.run(k);
                nodes += search.nodes();
                if (found)
                    return LambdaResult{ k, to_family(d, s, search.current(), k), OptimalityReason::exhaustive_search, true, k, nodes };

                if (search.best_partial().size() > known.size())
                    known = search.best_partial();

                if (search.exhausted()) {
                    int lower = int(known.size());
                    return LambdaResult{ lower, to_family(d, s, known, lower), OptimalityReason::budget_exhausted, false, k, nodes };
                }
            }
            return LambdaResult{ 0, CertificateFamily{ s, {} }, OptimalityReason::exhaustive_search, true, 0, nodes };
        }

        struct Feasibility
        {
            bool found;
            bool exhausted;
            vector<ArcBits> members;   ///< the packing if found, else the best partial one
            uint64_t nodes;
        };

        auto feasible(const Digraph & d, SeedPair s, int k, optional<uint64_t> node_limit) -> Feasibility
        {
            PackingSearch search{ d, s, node_limit };
            bool found = search.run(k);
            return Feasibility{ found, search.exhausted(), found ? search.current() : search.best_partial(), search.nodes() };
        }
    }

    auto lambda_s_upper_bound(const Digraph & d, SeedPair s) -> int
    {
        SeedPair::checked(s.x, s.y, d.order());
        return upper_bound_detail(d, s).value;
    }

    auto lambda_s_exact(const Digraph & d, SeedPair s, optional<uint64_t> node_limit) -> LambdaResult
    {
        SeedPair::checked(s.x, s.y, d.order());

        auto bound = upper_bound_detail(d, s);
        if (bound.value == 0) {
            auto reason = bound.flow_part == 0 ? OptimalityReason::unreachable : OptimalityReason::degree_bound;
            return LambdaResult{ 0, CertificateFamily{ s, {} }, reason, true, 0, 0 };
        }

        auto result = descend(d, s, bound.value, node_limit, {});
        if (result.exact && result.value == bound.value)
            result.reason = bound.value == bound.degree_part ? OptimalityReason::degree_bound : OptimalityReason::local_connectivity_bound;
        return result;
    }

    auto lambda_s_oracle_subsets(const Digraph & d, span<const Vertex> seeds) -> int
    {
        constexpr int arc_cap = 16;
        if (d.size() > arc_cap)
            throw InvalidInput{ "subset oracle is limited to " + std::to_string(arc_cap) + " arcs, got " + std::to_string(d.size()) };
        if (seeds.size() < 2)
            throw InvalidInput{ "subset oracle needs at least two seed vertices" };
        for (Vertex v : seeds)
            if (v < 0 || v >= d.order())
                throw InvalidInput{ "seed vertex out of range" };

        int arc_count = d.size();
        uint32_t full = (uint32_t{ 1 } << arc_count) - 1;

        auto subset_of = [&] (uint32_t mask) {
            vector<Arc> arcs;
            for (int i = 0 ; i < arc_count ; ++i)
                if (mask >> i & 1)
                    arcs.push_back(d.arc(i));
            return ArcSet{ std::move(arcs) };
        };

        // valid: the arcs span a strong subgraph containing every seed
        vector<char> valid(full + 1, 0), has_valid_subset(full + 1, 0);
        for (uint32_t mask = 1 ; mask <= full ; ++mask) {
            valid[mask] = arc_subset_spanning_check(d, subset_of(mask), seeds);
            has_valid_subset[mask] = valid[mask];
            for (int i = 0 ; i < arc_count && ! has_valid_subset[mask] ; ++i)
                if (mask >> i & 1)
                    has_valid_subset[mask] = has_valid_subset[mask & ~(uint32_t{ 1 } << i)];
        }

        // minimal valid sets, bucketed by their lowest arc
        vector<vector<uint32_t>> minimal_by_low(arc_count);
        for (uint32_t mask = 1 ; mask <= full ; ++mask) {
            if (! valid[mask])
                continue;
            bool minimal = true;
            for (int i = 0 ; i < arc_count && minimal ; ++i)
                if ((mask >> i & 1) && has_valid_subset[mask & ~(uint32_t{ 1 } << i)])
                    minimal = false;
            if (minimal)
                minimal_by_low[std::countr_zero(mask)].push_back(mask);
        }

        // best(avail): either the lowest available arc is left out, or it is
        // the lowest arc of a chosen set
        vector<int> best(full + 1, -1);
        best[0] = 0;
        auto pack = [&] (auto & self, uint32_t avail) -> int {
            if (best[avail] != -1)
                return best[avail];
            int low = std::countr_zero(avail);
            int result = self(self, avail & ~(uint32_t{ 1 } << low));
            for (uint32_t set : minimal_by_low[low])
                if ((set & avail) == set)
                    result = std::max(result, 1 + self(self, avail & ~set));
            return best[avail] = result;
        };

        return full == 0 ? 0 : pack(pack, full);
    }

    auto lambda_s_oracle_paths(const Digraph & d, SeedPair s, size_t path_cap) -> optional<int>
    {
        SeedPair::checked(s.x, s.y, d.order());

        size_t path_count = 0;
        bool over_cap = false;

        auto all_paths = [&] (Vertex from, Vertex to) {
            vector<ArcBits> result;
            vector<char> on_path(d.order(), 0);
            ArcBits current(d.size());
            auto dfs = [&] (auto & self, Vertex v) -> void {
                if (over_cap)
                    return;
                if (v == to) {
                    if (++path_count > path_cap)
                        over_cap = true;
                    else
                        result.push_back(current);
                    return;
                }
                on_path[v] = 1;
                for (int a : d.out_arcs(v)) {
                    Vertex w = d.arc(a).to;
                    if (on_path[w])
                        continue;
                    current.set(a);
                    self(self, w);
                    current.reset(a);
                }
                on_path[v] = 0;
            };
            dfs(dfs, from);
            return result;
        };

        auto forward = all_paths(s.x, s.y);
        auto backward = all_paths(s.y, s.x);
        if (over_cap)
            return std::nullopt;

        std::unordered_set<ArcBits, ArcBitsHash> unions;
        for (auto & p : forward)
            for (auto & q : backward) {
                if (unions.size() > path_cap)
                    return std::nullopt;
                unions.insert(p | q);
            }

        // a superset of another candidate is never needed in a maximum packing
        vector<ArcBits> candidates(unions.begin(), unions.end());
        std::sort(candidates.begin(), candidates.end(), [] (const ArcBits & a, const ArcBits & b) {
                if (a.count() != b.count())
                    return a.count() < b.count();
                return a.words() < b.words();
                });
        vector<ArcBits> minimal;
        for (auto & c : candidates)
            if (std::none_of(minimal.begin(), minimal.end(), [&] (const ArcBits & m) { return m.is_subset_of(c); }))
                minimal.push_back(c);

        // every candidate holds exactly one out-arc of x; decide those arcs in order
        auto x_out = d.out_arcs(s.x);
        vector<vector<const ArcBits *>> by_out_arc(x_out.size());
        for (auto & c : minimal)
            for (size_t i = 0 ; i < x_out.size() ; ++i)
                if (c.test(x_out[i]))
                    by_out_arc[i].push_back(&c);

        vector<std::unordered_map<ArcBits, int, ArcBitsHash>> memo(x_out.size());
        auto pack = [&] (auto & self, size_t i, const ArcBits & used) -> int {
            if (i == x_out.size())
                return 0;
            if (auto it = memo[i].find(used) ; it != memo[i].end())
                return it->second;
            int result = self(self, i + 1, used);
            for (auto * c : by_out_arc[i])
                if (! c->intersects(used))
                    result = std::max(result, 1 + self(self, i + 1, used | *c));
            memo[i].emplace(used, result);
            return result;
        };

        return pack(pack, 0, ArcBits(d.size()));
    }

    auto lambda_2(const Digraph & d, const Lambda2Mode & mode) -> Lambda2Result
    {
        if (d.order() < 2)
            throw InvalidInput{ "lambda_2 needs at least 2 vertices" };

        vector<SeedPair> pairs;
        if (mode.sampled) {
            if (mode.sample_count < 1)
                throw InvalidInput{ "sampled lambda_2 needs a positive sample count" };
            Rng rng{ mode.seed };
            std::set<std::pair<Vertex, Vertex>> chosen;
            long total = long(d.order()) * (d.order() - 1) / 2;
            while (long(chosen.size()) < std::min<long>(mode.sample_count, total)) {
                Vertex x = Vertex(rng.below(d.order())), y = Vertex(rng.below(d.order()));
                if (x != y)
                    chosen.emplace(std::min(x, y), std::max(x, y));
            }
            for (auto [x, y] : chosen)
                pairs.push_back(SeedPair{ x, y });
        }
        else {
            for (Vertex x = 0 ; x < d.order() ; ++x)
                for (Vertex y = x + 1 ; y < d.order() ; ++y)
                    pairs.push_back(SeedPair{ x, y });
        }

        struct PairState
        {
            SeedPair pair;
            int bound;
            optional<int> exact;          ///< lambda_S if known
            int lower = 0;                ///< lambda_S >= lower
            vector<ArcBits> witness;      ///< packing of size >= lower
        };

        vector<PairState> states;
        for (auto & p : pairs)
            states.push_back(PairState{ p, upper_bound_detail(d, p).value, std::nullopt, 0, {} });

        bool exact = true;

        // phase one: the minimum value, smallest bounds first
        vector<size_t> order(states.size());
        for (size_t i = 0 ; i < order.size() ; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&] (size_t a, size_t b) { return states[a].bound < states[b].bound; });

        int best = std::numeric_limits<int>::max();
        for (size_t i : order) {
            auto & st = states[i];
            if (st.bound < best) {
                auto r = descend(d, st.pair, st.bound, mode.node_limit, {});
                exact = exact && r.exact;
                st.lower = r.value;
                if (r.exact)
                    st.exact = r.value;
                for (auto & m : r.witness.members)
                    st.witness.push_back(to_arc_bits(d, m));
                best = std::min(best, r.value);
            }
            else {
                auto f = feasible(d, st.pair, best, mode.node_limit);
                if (f.found) {
                    st.lower = best;
                    st.witness = std::move(f.members);
                }
                else if (f.exhausted) {
                    exact = false;
                    st.lower = int(f.members.size());
                    st.witness = std::move(f.members);
                    best = std::min(best, st.lower);
                }
                else {
                    auto r = descend(d, st.pair, best - 1, mode.node_limit, std::move(f.members));
                    exact = exact && r.exact;
                    st.lower = r.value;
                    if (r.exact)
                        st.exact = r.value;
                    st.witness.clear();
                    for (auto & m : r.witness.members)
                        st.witness.push_back(to_arc_bits(d, m));
                    best = std::min(best, r.value);
                }
            }
        }

        // phase two: lexicographically least pair attaining the minimum
        optional<size_t> argmin;
        for (size_t i = 0 ; i < states.size() && ! argmin ; ++i) {
            auto & st = states[i];
            if (st.exact) {
                if (*st.exact == best)
                    argmin = i;
            }
            else if (st.bound == best || st.lower == best) {
                if (st.bound == best)
                    argmin = i;
                else {
                    auto f = feasible(d, st.pair, best + 1, mode.node_limit);
                    if (f.exhausted)
                        exact = false;
                    if (! f.found)
                        argmin = i;
                }
            }
        }
        if (! argmin) {
            // only reachable with budget exhaustion; fall back to the first pair attaining best
            for (size_t i = 0 ; i < states.size() && ! argmin ; ++i)
                if (states[i].lower == best)
                    argmin = i;
        }

        auto & chosen = states[*argmin];
        if (int(chosen.witness.size()) < best) {
            auto f = feasible(d, chosen.pair, best, mode.node_limit);
            if (f.found)
                chosen.witness = std::move(f.members);
        }

        return Lambda2Result{ best, chosen.pair, to_family(d, chosen.pair, chosen.witness, size_t(best)),
            exact && ! mode.sampled, mode.sampled, int(states.size()) };
    }
}
