/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/digraph_io.hh>

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace arcconn
{
    auto read_digraph_text(std::istream & in) -> TextDigraph
    {
        static const std::regex product_header{ R"(#\s*product\s+n\s*=\s*(\d{1,9})\s+m\s*=\s*(\d{1,9}))" };

        optional<int> order;
        optional<ProductShape> product;
        vector<Arc> arcs;

        string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;

            std::smatch match;
            if (std::regex_search(line, match, product_header))
                product = ProductShape{ std::stoi(match[1]), std::stoi(match[2]) };

            if (auto hash = line.find('#') ; hash != string::npos)
                line.erase(hash);

            std::istringstream tokens{ line };
            string first;
            if (! (tokens >> first))
                continue;

            auto fail = [&] (const string & why) {
                return ParseError{ "line " + to_string(line_number) + ": " + why };
            };

            if (first == "n") {
                int value;
                if (order)
                    throw fail("repeated order line");
                if (! (tokens >> value) || value < 1)
                    throw fail("expected 'n <order>' with a positive order");
                order = value;
            }
            else {
                if (! order)
                    throw fail("arc before the 'n <order>' line");
                int u, v;
                std::istringstream arc_tokens{ line };
                if (! (arc_tokens >> u >> v))
                    throw fail("expected 'u v'");
                string rest;
                if (arc_tokens >> rest)
                    throw fail("trailing text after arc");
                arcs.push_back(Arc{ u, v });
            }
        }

        if (! order)
            throw ParseError{ "missing 'n <order>' line" };
        if (product && static_cast<long long>(product->n) * product->m != *order)
            throw ParseError{ "product header n*m does not match the order" };

        try {
            return TextDigraph{ Digraph::from_arc_list(*order, arcs), product };
        }
        catch (const InvalidInput & e) {
            throw ParseError{ e.what() };
        }
    }

    auto read_digraph_file(const string & filename) -> TextDigraph
    {
        std::ifstream in{ filename };
        if (! in)
            throw ParseError{ "cannot open '" + filename + "'" };
        return read_digraph_text(in);
    }

    auto write_digraph_text(std::ostream & out, const Digraph & d, optional<ProductShape> product) -> void
    {
        if (product)
            out << "# product n=" << product->n << " m=" << product->m << '\n';
        out << "n " << d.order() << '\n';
        for (auto & a : d.arcs())
            out << a.from << ' ' << a.to << '\n';
    }

    auto dot_colour(int index) -> string
    {
        static const std::array<const char *, 8> palette{ "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4" };
        if (index < int(palette.size()))
            return palette[index];

        // golden-ratio hue walk keeps later colours distinct
        double hue = 0.0;
        for (int i = 0 ; i <= index ; ++i)
            hue += 0.618033988749895;
        hue -= int(hue);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f 0.85 0.75", hue);
        return buf;
    }

    auto write_dot(std::ostream & out, const Digraph & d, const DotOptions & options) -> void
    {
        out << "digraph G {\n";
        for (Vertex v = 0 ; v < d.order() ; ++v) {
            out << "  " << v;
            if (options.product)
                out << " [label=\"(" << v / options.product->m << "," << v % options.product->m << ")\"]";
            out << ";\n";
        }

        for (auto & a : d.arcs()) {
            out << "  " << a.from << " -> " << a.to;
            for (int i = int(options.highlighted.size()) - 1 ; i >= 0 ; --i)
                if (options.highlighted[i].contains(a)) {
                    out << " [color=\"" << dot_colour(i) << "\", penwidth=2]";
                    break;
                }
            out << ";\n";
        }
        out << "}\n";
    }
}
