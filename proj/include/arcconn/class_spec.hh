/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ARCCONN_GUARD_ARCCONN_CLASS_SPEC_HH
#define ARCCONN_GUARD_ARCCONN_CLASS_SPEC_HH 1

#include <arcconn/digraph.hh>
#include <arcconn/digraph_io.hh>
#include <arcconn/generators.hh>

#include <optional>
#include <string>
#include <vector>

namespace arcconn
{
    /**
     * Textual digraph tokens:
     *
     *     cn:<n>                  directed cycle
     *     bcm:<m>                 bidirected cycle
     *     btm:<shape>:<m>         bidirected tree; path, star, caterpillar, random-<seed>
     *     bkm:<m>                 complete digraph
     *     rand:<n>:<p>:<seed>     random strong digraph
     *     file:<path>             text format, or JSON if the path ends in .json
     */
    struct ClassSpec
    {
        std::string token;
        Digraph digraph;
        std::optional<ProductShape> product;   ///< only from a file with a product header
    };

    /// Throws ParseError for malformed tokens or unreadable files.
    auto parse_class_spec(const std::string & token) -> ClassSpec;

    auto parse_tree_shape(const std::string & name) -> TreeShape;

    struct InputExpression
    {
        std::string label;
        Digraph digraph;
        std::optional<ProductShape> product;
        std::optional<Digraph> g;   ///< factors, for an "A x B" expression
        std::optional<Digraph> h;
    };

    /**
     * Either one token or "A x B". The words may arrive as separate
     * arguments or in a single string.
     */
    auto parse_input_expression(const std::vector<std::string> & words) -> InputExpression;

    extern const char * const class_spec_help;
}

#endif
