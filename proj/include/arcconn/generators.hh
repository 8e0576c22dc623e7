/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_GENERATORS_HH
#define ARCCONN_GUARD_ARCCONN_GENERATORS_HH 1

#include <arcconn/digraph.hh>

#include <cstdint>
#include <random>
#include <string>

namespace arcconn
{
    using RngSeed = std::uint64_t;

    /**
     * Seeded generator with platform-independent derived draws (the standard
     * distributions are implementation-defined, the raw engine is not).
     */
    class Rng
    {
        private:
            std::mt19937_64 _engine;

        public:
            explicit Rng(RngSeed seed) : _engine(seed) { }

            /// Uniform in [0, bound).
            auto below(std::uint64_t bound) -> std::uint64_t { return _engine() % bound; }

            /// Uniform in [low, high].
            auto between(int low, int high) -> int { return low + int(below(std::uint64_t(high - low + 1))); }

            /// Uniform in [0, 1).
            auto real() -> double { return double(_engine() >> 11) * 0x1.0p-53; }
    };

    enum class TreeKind
    {
        path,
        star,
        caterpillar,
        random
    };

    struct TreeShape
    {
        TreeKind kind = TreeKind::path;
        int order = 2;
        RngSeed seed = 0;   ///< only used by TreeKind::random
    };

    /// "path", "star", "caterpillar", "random-<seed>".
    auto tree_shape_name(const TreeShape & shape) -> std::string;

    auto tree(const TreeShape & shape) -> UndirectedGraph;

    /// Arcs i -> i+1 mod n. n = 2 gives the digon.
    auto directed_cycle(int n) -> Digraph;

    auto bidirected_cycle(int m) -> Digraph;

    auto bidirected_tree(const TreeShape & shape) -> Digraph;

    auto complete_digraph(int m) -> Digraph;

    /**
     * A Hamiltonian cycle through a random permutation, plus every other
     * ordered pair independently with probability extra_arc_prob.
     */
    auto random_strong_digraph(int n, double extra_arc_prob, RngSeed seed) -> Digraph;

    /// A random labelled tree plus every other pair with probability extra_edge_prob.
    auto random_connected_graph(int n, double extra_edge_prob, RngSeed seed) -> UndirectedGraph;
}

#endif
