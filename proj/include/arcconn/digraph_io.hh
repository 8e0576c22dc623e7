/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_DIGRAPH_IO_HH
#define ARCCONN_GUARD_ARCCONN_DIGRAPH_IO_HH 1

#include <arcconn/digraph.hh>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcconn
{
    class ParseError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct ProductShape
    {
        int n;
        int m;

        auto operator<=> (const ProductShape &) const = default;
    };

    struct TextDigraph
    {
        Digraph digraph;
        std::optional<ProductShape> product;   ///< from a "# product n=.. m=.." header
    };

    /**
     * Text format: a line "n <order>", then one "u v" arc per line. Anything
     * after '#' is a comment, blank lines are ignored, vertices are 0-indexed.
     * A comment of the form "# product n=<n> m=<m>" marks the digraph as a
     * Cartesian product with flat index i * m + j.
     */
    auto read_digraph_text(std::istream & in) -> TextDigraph;
    auto read_digraph_file(const std::string & filename) -> TextDigraph;

    auto write_digraph_text(std::ostream & out, const Digraph & d, std::optional<ProductShape> product = std::nullopt) -> void;

    struct DotOptions
    {
        std::optional<ProductShape> product;     ///< label vertices as (i,j)
        std::vector<ArcSet> highlighted;         ///< one colour per set
    };

    auto write_dot(std::ostream & out, const Digraph & d, const DotOptions & options = {}) -> void;

    /// Colour used for the i-th highlighted arc set.
    auto dot_colour(int index) -> std::string;
}

#endif
