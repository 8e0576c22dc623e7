/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_SSSC_HH
#define ARCCONN_GUARD_ARCCONN_SSSC_HH 1

#include <arcconn/digraph.hh>
#include <arcconn/generators.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arcconn
{
    /**
     * The seed set S = {x, y}. Order is kept because the product
     * constructions treat x as the anchor, but equality is set equality.
     */
    struct SeedPair
    {
        Vertex x;
        Vertex y;

        /// Throws InvalidInput if x == y or either is outside [0, order).
        static auto checked(Vertex x, Vertex y, int order) -> SeedPair;

        auto operator== (const SeedPair & other) const -> bool
        {
            return (x == other.x && y == other.y) || (x == other.y && y == other.x);
        }
    };

    /// Claimed witness that lambda_S(D) >= members.size().
    struct CertificateFamily
    {
        SeedPair seed;
        std::vector<ArcSet> members;
    };

    struct MemberReport
    {
        bool arcs_in_host = true;
        bool strong = false;
        bool contains_seed = false;

        auto valid() const -> bool { return arcs_in_host && strong && contains_seed; }
    };

    struct Overlap
    {
        int first;
        int second;
        ArcSet shared;
    };

    struct VerificationReport
    {
        bool valid = false;
        bool seed_valid = false;
        std::vector<MemberReport> members;
        std::vector<Overlap> overlaps;

        /// One line per violation, or "valid".
        auto describe() const -> std::string;
    };

    /// Checks every member and every pair of members; never throws on bad content.
    auto verify_certificate(const Digraph & d, const CertificateFamily & cert) -> VerificationReport;

    /**
     * min(d+(x), d-(x), d+(y), d-(y), lambda(x->y), lambda(y->x)).
     */
    auto lambda_s_upper_bound(const Digraph & d, SeedPair s) -> int;

    enum class OptimalityReason
    {
        unreachable,                ///< x and y are not mutually reachable
        degree_bound,               ///< value meets a degree of x or y
        local_connectivity_bound,   ///< value meets lambda(x->y) or lambda(y->x)
        exhaustive_search,          ///< the next value up was refuted by search
        budget_exhausted            ///< inexact, value is only a lower bound
    };

    auto to_string(OptimalityReason r) -> std::string;

    struct LambdaResult
    {
        int value;                   ///< exact, or the best lower bound found
        CertificateFamily witness;   ///< witness.members.size() == value
        OptimalityReason reason;
        bool exact;
        int upper_bound;             ///< equals value when exact
        std::uint64_t nodes;
    };

    /**
     * Exact lambda_S(D) for S = {x, y}, by iterative deepening from the upper
     * bound. Each member of a packing is built as the union of an x->y path
     * and a y->x path over arcs unused by earlier members. If node_limit is
     * reached the result is flagged inexact and carries the best bounds.
     */
    auto lambda_s_exact(const Digraph & d, SeedPair s, std::optional<std::uint64_t> node_limit = std::nullopt) -> LambdaResult;

    /**
     * Brute-force lambda_S for any |S| >= 2 by enumerating every arc subset.
     * Throws InvalidInput if the digraph has more than 16 arcs.
     */
    auto lambda_s_oracle_subsets(const Digraph & d, std::span<const Vertex> seeds) -> int;

    inline constexpr std::size_t default_path_cap = 100000;

    /**
     * lambda_S from all simple x->y and y->x paths: candidates are the unions
     * P u Q, packed exhaustively. Returns nullopt if more than path_cap paths
     * exist.
     */
    auto lambda_s_oracle_paths(const Digraph & d, SeedPair s, std::size_t path_cap = default_path_cap) -> std::optional<int>;

    struct Lambda2Mode
    {
        bool sampled = false;
        int sample_count = 0;
        RngSeed seed = 0;
        std::optional<std::uint64_t> node_limit;   ///< per seed pair

        static auto exhaustive() -> Lambda2Mode { return Lambda2Mode{}; }
        static auto sample(int count, RngSeed seed) -> Lambda2Mode { return Lambda2Mode{ true, count, seed, std::nullopt }; }
    };

    struct Lambda2Result
    {
        int value;
        SeedPair argmin;
        CertificateFamily witness;
        bool exact;        ///< false if sampled or a search ran out of budget
        bool upper_bound;  ///< true if value is only known to be >= lambda_2
        int pairs_examined;
    };

    /**
     * min over pairs of lambda_S. In exhaustive mode argmin is the
     * lexicographically least minimising pair, independent of evaluation
     * order. Throws InvalidInput for a one-vertex digraph.
     */
    auto lambda_2(const Digraph & d, const Lambda2Mode & mode = Lambda2Mode::exhaustive()) -> Lambda2Result;
}

#endif
