/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_CONSTRUCTIONS_HH
#define ARCCONN_GUARD_ARCCONN_CONSTRUCTIONS_HH 1

#include <arcconn/digraph.hh>
#include <arcconn/flow.hh>
#include <arcconn/generators.hh>
#include <arcconn/product.hh>
#include <arcconn/sssc.hh>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcconn
{
    /// An assembled certificate family failed verification.
    class ConstructionError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    enum class FormulaTerm
    {
        lambda_g_times_order_h,
        lambda_h_times_order_g,
        out_degree_sum,
        in_degree_sum
    };

    auto to_string(FormulaTerm t) -> std::string;

    /**
     * The four terms whose minimum is the arc-strong connectivity of G □ H
     * for strong G, H of order at least 2.
     */
    struct FormulaBreakdown
    {
        int lambda_g_times_order_h;
        int lambda_h_times_order_g;
        int out_degree_sum;
        int in_degree_sum;
        int value;
        FormulaTerm argmin;   ///< first term attaining the minimum
    };

    /// Throws InvalidInput unless both factors are strong with order >= 2.
    auto product_lambda_formula(const Digraph & g, const Digraph & h) -> FormulaBreakdown;

    /**
     * min(lambda(G)|H|, lambda(H)|G|, delta(G) + delta(H)) for connected
     * undirected G, H of order at least 2.
     */
    auto undirected_product_lambda(const UndirectedGraph & g, const UndirectedGraph & h) -> int;

    struct Theorem31Check
    {
        FormulaBreakdown formula;
        ConnectivityReport observed;   ///< flow on the explicit product
        bool cut_verified;
        bool passed;
    };

    auto check_theorem31(const Digraph & g, const Digraph & h) -> Theorem31Check;

    enum class LiftCase
    {
        shared_h_fiber,   ///< x, y in one H(u_i)
        shared_g_fiber,   ///< x, y in one G(v_j)
        subcase_2_1,      ///< neither chosen out-neighbour hits the other fiber
        subcase_2_2,      ///< exactly one does
        subcase_2_3       ///< both do; one member of each kind is rerouted
    };

    auto to_string(LiftCase c) -> std::string;

    struct LiftResult
    {
        ProductDigraph product;
        CertificateFamily family;   ///< flat product indices
        LiftCase kind;
        bool dropped_member;        ///< a conflicting member was removed
    };

    /**
     * Builds arc-disjoint {x,y}-strong subgraphs of G □ H from fiber
     * certificates of G and H: at least lambda_2(G) + lambda_2(H) - 1 of them.
     * Throws InvalidInput for non-strong factors and ConstructionError if the
     * assembled family does not verify.
     */
    auto lift_certificates(const Digraph & g, const Digraph & h, SeedPair s) -> LiftResult;

    enum class DigraphClass
    {
        dicycle,      ///< directed cycle
        bicycle,      ///< bidirected cycle
        bitree,       ///< bidirected tree
        bicomplete    ///< complete digraph
    };

    auto to_string(DigraphClass c) -> std::string;
    auto min_order(DigraphClass c) -> int;
    auto class_digraph(DigraphClass c, int order, TreeShape shape = {}) -> Digraph;

    enum class PropRouting
    {
        figure,    ///< the drawn seed position, y - x = (1,1)
        general,   ///< explicit routing for another general position
        solver     ///< seeds share a fiber; family from the exact search
    };

    auto to_string(PropRouting r) -> std::string;

    struct PropCertificate
    {
        ProductDigraph product;
        CertificateFamily family;
        PropRouting routing;
    };

    /// 2, 3, 2 and m members for a directed cycle times the given class.
    auto prop_cardinality(DigraphClass second, int m) -> int;

    /**
     * Explicit certificate family for C_n □ X with X one of the four
     * classes; the first factor is always the directed n-cycle. The tree
     * shape is only read for DigraphClass::bitree.
     */
    auto prop_certificates(DigraphClass second, int n, int m, SeedPair s, TreeShape shape = {}) -> PropCertificate;

    /// Closed-form lambda_2 of (row class, order n) □ (column class, order m).
    auto table1_value(DigraphClass row, DigraphClass column, int n, int m) -> int;

    struct BoundsReport
    {
        int lambda2_g;
        int lambda2_h;
        int lower;                   ///< lambda2_g + lambda2_h - 1
        FormulaBreakdown upper;
        std::optional<int> observed;
        bool lower_tight = false;
        bool upper_tight = false;

        auto sandwiched() const -> bool { return ! observed || (lower <= *observed && *observed <= upper.value); }
    };

    auto check_bounds(const Digraph & g, const Digraph & h, bool compute_exact) -> BoundsReport;

    /// Orders uniform in [min_order, max_order], extra-arc probability uniform in [0, 0.7).
    auto random_strong_pair(RngSeed seed, int min_order, int max_order) -> std::pair<Digraph, Digraph>;

    struct HuntConfig
    {
        int min_order = 2;
        int max_order = 4;
        bool include_class_pairs = false;   ///< also run the 16 class pairs at order 3
    };

    struct HuntTrial
    {
        std::string label;
        Digraph g;
        Digraph h;
        BoundsReport bounds;
    };

    struct HuntWitness
    {
        HuntTrial trial;
        Lambda2Result product_lambda2;
        Lambda2Result g_lambda2;
        Lambda2Result h_lambda2;
    };

    struct HuntReport
    {
        std::vector<HuntTrial> trials;
        std::vector<HuntWitness> witnesses;   ///< observed == lower
        std::map<int, int> gap_histogram;     ///< observed - lower -> count
        bool all_sandwiched = true;
    };

    auto hunt_tightness(const HuntConfig & config, int trials, RngSeed seed) -> HuntReport;
}

#endif
