/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_FLOW_HH
#define ARCCONN_GUARD_ARCCONN_FLOW_HH 1

#include <arcconn/arc_bits.hh>
#include <arcconn/digraph.hh>

#include <limits>
#include <vector>

namespace arcconn
{
    /**
     * Maximum number of arc-disjoint s-t paths, with both Menger
     * certificates: an s-t arc cut of that size and that many paths.
     */
    struct LocalArcConnectivity
    {
        Vertex source;
        Vertex sink;
        int value;
        ArcSet cut;
        std::vector<std::vector<Vertex>> paths;   ///< vertex sequences s .. t
    };

    /// Throws InvalidInput if s == t.
    auto max_flow_unit(const Digraph & d, Vertex s, Vertex t) -> LocalArcConnectivity;

    /**
     * Value-only variant over the arcs not in blocked, stopping once cap
     * paths have been found.
     */
    auto max_arc_disjoint_paths(const Digraph & d, Vertex s, Vertex t, const ArcBits & blocked,
            int cap = std::numeric_limits<int>::max()) -> int;

    struct ConnectivityReport
    {
        int lambda;
        int delta_out;
        int delta_in;
        ArcSet min_cut;
        bool strong;   ///< false means lambda = 0 and min_cut is empty
    };

    /**
     * Global arc-strong connectivity from 2(n-1) flows against vertex 0.
     * Throws InvalidInput for a one-vertex digraph.
     */
    auto arc_connectivity(const Digraph & d) -> ConnectivityReport;

    /// True iff d with the cut arcs deleted is not strong.
    auto verify_cut(const Digraph & d, const ArcSet & cut) -> bool;
}

#endif
