/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <arcconn/certificate_json.hh>
#include <arcconn/class_spec.hh>
#include <arcconn/constructions.hh>
#include <arcconn/generators.hh>
#include <arcconn/product.hh>

#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace arcconn;

using std::string;
using std::vector;

TEST_CASE("Certificate JSON round trip")
{
    auto r = prop_certificates(DigraphClass::bicycle, 3, 4, { 0, 5 });
    CertificateBundle bundle{ r.product.digraph().order(), r.family, r.product.digraph(), r.product.shape() };
    auto text = certificate_to_json(bundle);
    auto back = certificate_from_json(text);
    CHECK(back.order == 12);
    CHECK(back.family.seed.x == 0);
    CHECK(back.family.seed.y == 5);
    CHECK(back.family.members == r.family.members);
    REQUIRE(back.host);
    CHECK(*back.host == r.product.digraph());
    CHECK(back.factors == ProductShape{ 3, 4 });
    CHECK(certificate_to_json(back) == text);
}

TEST_CASE("Certificate JSON without optional fields")
{
    auto back = certificate_from_json(R"({"n": 3, "s": 0, "t": 1, "members": [[[0,1],[1,0]], [[0,2],[2,1],[1,2],[2,0]]]})");
    CHECK(back.order == 3);
    CHECK(! back.host);
    CHECK(! back.factors);
    REQUIRE(back.family.members.size() == 2);
    CHECK(back.family.members[0] == ArcSet{ { 0, 1 }, { 1, 0 } });
    CHECK(verify_certificate(complete_digraph(3), back.family).valid);
}

TEST_CASE("Malformed certificate JSON")
{
    CHECK_THROWS_AS(certificate_from_json("{\"n\": 3, \"s\": 0"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("[]"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"n": 3, "s": 0, "members": []})"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"n": 3, "s": 0, "t": 1, "members": [[[0]]]})"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"n": 3, "s": 0, "t": 1, "members": [[[0,"a"]]]})"), ParseError);
    CHECK_THROWS_AS(certificate_from_json(R"({"n": 3, "s": 0, "t": 9, "members": []})"), ParseError);
    CHECK_THROWS_AS(read_certificate_file("no/such/file.json"), ParseError);
}

TEST_CASE("Digraph JSON round trip")
{
    auto p = cartesian_product(directed_cycle(3), complete_digraph(2));
    auto back = digraph_from_json(digraph_to_json(p.digraph(), p.shape()));
    CHECK(back.digraph == p.digraph());
    CHECK(back.product == ProductShape{ 3, 2 });

    auto plain = digraph_from_json(digraph_to_json(directed_cycle(4)));
    CHECK(plain.digraph == directed_cycle(4));
    CHECK(! plain.product);

    CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[0,0]]})"), ParseError);
    CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[0,1]], "factors": [3, 3]})"), ParseError);
}

TEST_CASE("Class tokens")
{
    CHECK(parse_class_spec("cn:5").digraph == directed_cycle(5));
    CHECK(parse_class_spec("bcm:4").digraph == bidirected_cycle(4));
    CHECK(parse_class_spec("bkm:3").digraph == complete_digraph(3));
    CHECK(parse_class_spec("btm:star:5").digraph == bidirected_tree(TreeShape{ TreeKind::star, 5 }));
    CHECK(parse_class_spec("btm:random-9:6").digraph == bidirected_tree(TreeShape{ TreeKind::random, 6, 9 }));
    CHECK(parse_class_spec("rand:5:0.3:7").digraph == random_strong_digraph(5, 0.3, 7));
    CHECK(! parse_class_spec("cn:5").product);
}

TEST_CASE("Bad class tokens")
{
    for (string bad : { "cn", "cn:", "cn:x", "cn:3:4", "zz:3", "btm:oak:4", "btm:path", "rand:4:1.5:1",
            "rand:4:0.2", "bkm:0", "cn:-2", "file:no/such/file.dg" })
        CHECK_THROWS_AS(parse_class_spec(bad), ParseError);
}

TEST_CASE("Tree shapes")
{
    CHECK(parse_tree_shape("path").kind == TreeKind::path);
    CHECK(parse_tree_shape("caterpillar").kind == TreeKind::caterpillar);
    CHECK(parse_tree_shape("random-12").seed == 12);
    CHECK_THROWS_AS(parse_tree_shape("random-"), ParseError);
}

TEST_CASE("Input expressions")
{
    auto single = parse_input_expression({ "bkm:4" });
    CHECK(single.digraph == complete_digraph(4));
    CHECK(! single.g);

    auto split = parse_input_expression({ "cn:3", "x", "bcm:4" });
    CHECK(split.product == ProductShape{ 3, 4 });
    CHECK(split.digraph == cartesian_product(directed_cycle(3), bidirected_cycle(4)).digraph());
    REQUIRE(split.g);
    CHECK(*split.g == directed_cycle(3));
    CHECK(*split.h == bidirected_cycle(4));

    auto joined = parse_input_expression({ "cn:3 x bcm:4" });
    CHECK(joined.digraph == split.digraph);
    CHECK(joined.label == "cn:3 x bcm:4");

    CHECK_THROWS_AS(parse_input_expression({}), ParseError);
    CHECK_THROWS_AS(parse_input_expression({ "cn:3", "y", "cn:3" }), ParseError);
    CHECK_THROWS_AS(parse_input_expression({ "cn:3", "x" }), ParseError);
}

TEST_CASE("Files as class tokens")
{
    auto spec = parse_class_spec("file:" + string{ ARCCONN_TEST_DATA } + "/path3.dg");
    CHECK(spec.digraph.order() == 3);
    CHECK_THROWS_AS(parse_class_spec("file:" + string{ ARCCONN_TEST_DATA } + "/broken.json"), ParseError);
}
