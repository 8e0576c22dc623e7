/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/certificate_json.hh>

#include <json.hpp>

#include <fstream>
#include <sstream>

using nlohmann::json;

using std::optional;
using std::string;
using std::vector;

namespace arcconn
{
    namespace
    {
        auto arcs_to_json(const vector<Arc> & arcs) -> json
        {
            json result = json::array();
            for (auto & a : arcs)
                result.push_back({ a.from, a.to });
            return result;
        }

        auto arcs_from_json(const json & j, const char * what) -> vector<Arc>
        {
            if (! j.is_array())
                throw ParseError{ string{ what } + " must be an array of [u,v] pairs" };
            vector<Arc> result;
            for (auto & pair : j) {
                if (! pair.is_array() || pair.size() != 2 || ! pair[0].is_number_integer() || ! pair[1].is_number_integer())
                    throw ParseError{ string{ what } + " contains an entry that is not a [u,v] pair" };
                result.push_back(Arc{ pair[0].get<int>(), pair[1].get<int>() });
            }
            return result;
        }

        auto get_int(const json & j, const char * key) -> int
        {
            if (! j.contains(key) || ! j[key].is_number_integer())
                throw ParseError{ string{ "missing integer field \"" } + key + "\"" };
            return j[key].get<int>();
        }

        auto parse(const string & text) -> json
        {
            try {
                auto j = json::parse(text);
                if (! j.is_object())
                    throw ParseError{ "expected a JSON object" };
                return j;
            }
            catch (const json::parse_error & e) {
                throw ParseError{ string{ "invalid JSON: " } + e.what() };
            }
        }

        auto parse_factors(const json & j, int order) -> optional<ProductShape>
        {
            if (! j.contains("factors"))
                return std::nullopt;
            auto & f = j["factors"];
            if (! f.is_array() || f.size() != 2 || ! f[0].is_number_integer() || ! f[1].is_number_integer())
                throw ParseError{ "\"factors\" must be [n, m]" };
            ProductShape shape{ f[0].get<int>(), f[1].get<int>() };
            if (shape.n * shape.m != order)
                throw ParseError{ "factor orders do not multiply to n" };
            return shape;
        }

        auto parse_host(const json & j, int order) -> Digraph
        {
            try {
                auto arcs = arcs_from_json(j["arcs"], "\"arcs\"");
                return Digraph::from_arc_list(order, arcs);
            }
            catch (const InvalidInput & e) {
                throw ParseError{ e.what() };
            }
        }
    }

    auto certificate_to_json(const CertificateBundle & bundle) -> string
    {
        json j;
        j["n"] = bundle.order;
        j["s"] = bundle.family.seed.x;
        j["t"] = bundle.family.seed.y;
        json members = json::array();
        for (auto & m : bundle.family.members)
            members.push_back(arcs_to_json(m.arcs()));
        j["members"] = members;
        if (bundle.host)
            j["arcs"] = arcs_to_json(bundle.host->arcs());
        if (bundle.factors)
            j["factors"] = { bundle.factors->n, bundle.factors->m };
        return j.dump() + "\n";
    }

    auto certificate_from_json(const string & text) -> CertificateBundle
    {
        auto j = parse(text);
        int order = get_int(j, "n");
        if (order < 1)
            throw ParseError{ "\"n\" must be positive" };
        Vertex s = get_int(j, "s"), t = get_int(j, "t");
        if (s < 0 || s >= order || t < 0 || t >= order || s == t)
            throw ParseError{ "\"s\" and \"t\" must be distinct vertices below \"n\"" };

        if (! j.contains("members") || ! j["members"].is_array())
            throw ParseError{ "missing array field \"members\"" };
        vector<ArcSet> members;
        for (auto & m : j["members"])
            members.emplace_back(arcs_from_json(m, "a member"));

        CertificateBundle bundle{ order, CertificateFamily{ SeedPair{ s, t }, std::move(members) }, std::nullopt, parse_factors(j, order) };
        if (j.contains("arcs"))
            bundle.host = parse_host(j, order);
        return bundle;
    }

    auto read_certificate_file(const string & filename) -> CertificateBundle
    {
        std::ifstream in{ filename };
        if (! in)
            throw ParseError{ "cannot open " + filename };
        std::stringstream buffer;
        buffer << in.rdbuf();
        return certificate_from_json(buffer.str());
    }

    auto digraph_to_json(const Digraph & d, optional<ProductShape> factors) -> string
    {
        json j;
        j["n"] = d.order();
        if (factors)
            j["factors"] = { factors->n, factors->m };
        j["arcs"] = arcs_to_json(d.arcs());
        return j.dump() + "\n";
    }

    auto digraph_from_json(const string & text) -> TextDigraph
    {
        auto j = parse(text);
        int order = get_int(j, "n");
        if (order < 1)
            throw ParseError{ "\"n\" must be positive" };
        if (! j.contains("arcs"))
            throw ParseError{ "missing array field \"arcs\"" };
        return TextDigraph{ parse_host(j, order), parse_factors(j, order) };
    }
}
