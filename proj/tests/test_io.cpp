#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "prips/io.hpp"
#include "prips/obstructions.hpp"

using namespace prips;

namespace {

PointCloud csv(const std::string& text)
{
    std::istringstream in(text);
    return read_points_csv(in);
}

std::string parse_error(const std::string& text)
{
    try {
        csv(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("io")
{
    TEST_CASE("rational parsing")
    {
        CHECK(parse_rational("0.25") == Rational(1, 4));
        CHECK(parse_rational("010") == 10);
        CHECK(parse_rational("010/08") == Rational(5, 4));
        CHECK(parse_rational("-0.0625") == Rational(-1, 16));
        CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
        CHECK(parse_rational("+2E2") == 200);
        CHECK(parse_rational(".5") == Rational(1, 2));
        CHECK(parse_rational("000") == 0);
        CHECK(to_string(parse_rational("6/4")) == "3/2");
        CHECK(to_string(parse_rational("-7")) == "-7");
        for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "0x10", "--1"}) {
            CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
        }
        CHECK(rationalize(0.1234567, 1000000) == Rational(123457, 1000000));
    }

    TEST_CASE("csv points")
    {
        const auto c = csv("x,y\n# comment\n0,0\n 1/2 , 0.25\n\n-3,1e-3\n");
        REQUIRE(c.size() == 3);
        CHECK(c.points[1] == make_point("1/2", "1/4"));
        CHECK(c.points[2] == make_point("-3", "1/1000"));
        CHECK(csv("0,0\n").size() == 1);
    }

    TEST_CASE("csv errors carry line numbers")
    {
        CHECK(parse_error("") == "point file contains no points");
        CHECK(parse_error("x,y\n") == "point file contains no points");
        CHECK(parse_error("0,0\n1,1\n\nzz,1\n").rfind("line 4:", 0) == 0);
        CHECK(parse_error("0,0,0\n").rfind("line 1:", 0) == 0);
        CHECK_THROWS_AS(csv("0,0\n0,0\n"), GeometryError);
    }

    TEST_CASE("json points")
    {
        const Json j = Json::parse(R"({"r": "3/2", "points": [["0", "0"], [0.5, 1], ["1/3", "-2"]]})");
        const auto c = points_from_json(j);
        CHECK(c.scale == Rational(3, 2));
        CHECK(c.points[1] == make_point("1/2", "1"));
        const auto back = points_from_json(points_to_json(c));
        CHECK(back.points == c.points);
        CHECK(back.scale == c.scale);
        CHECK_THROWS_AS(points_from_json(Json::parse(R"({"points": []})")), ParseError);
        CHECK_THROWS_AS(points_from_json(Json::parse(R"({"points": [[1]]})")), ParseError);
        CHECK_THROWS_AS(points_from_json(Json::parse(R"({"points": [["a", "1"]]})")), ParseError);
        CHECK_THROWS_AS(points_from_json(Json::parse(R"([1, 2])")), ParseError);
    }

    TEST_CASE("graph json round trip")
    {
        const Graph g = gen_rp2_7();
        const Json j = graph_to_json(g);
        CHECK(j["n"] == 7);
        CHECK(j["edges"].size() == 13);
        CHECK(j["labels"][0] == "A");
        const Graph back = graph_from_json(j);
        CHECK(back == g);
        CHECK(back.labels() == g.labels());
        CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), ParseError);
        CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[1, 1]]})")), ParseError);
        CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), ParseError);
        CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "labels": ["a"]})")), ParseError);
    }

    TEST_CASE("complex json")
    {
        const auto k = clique_complex(oracle::cocktail_party(3));
        const Json j = complex_to_json(k, ThresholdMode::StrictLess);
        CHECK(j["mode"] == "strict");
        CHECK(j["facets"].size() == 8);
        CHECK(j["facets"][0] == Json::parse("[0, 2, 4]"));
        CHECK(complex_from_json(j).facets() == k.facets());
        Json bad = j;
        bad["facets"].erase(0);
        CHECK_THROWS_AS(complex_from_json(bad), ParseError);
        // deterministic serialization
        CHECK(dump(complex_to_json(k, std::nullopt)) == dump(complex_to_json(clique_complex(oracle::cocktail_party(3)), std::nullopt)));
    }

    TEST_CASE("catalog json")
    {
        const Json j = catalog_to_json(builtin_catalog());
        CHECK(j.size() == builtin_catalog().size());
        const auto back = catalog_from_json(j);
        REQUIRE(back.size() == builtin_catalog().size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            CHECK(back[i].id == builtin_catalog()[i].id);
            CHECK(back[i].graph == builtin_catalog()[i].graph);
            CHECK(back[i].status == builtin_catalog()[i].status);
        }
        CHECK_THROWS_AS(catalog_from_json(Json::parse(R"([{"id": "x", "n": 2, "edges": []}])")), ParseError);
        CHECK_THROWS_AS(catalog_from_json(Json::parse(R"([{"id": "x", "n": 2, "edges": [[0, 1]], "status": "odd"}])")),
                        ParseError);
        CHECK_THROWS_AS(catalog_from_json(Json::parse(R"({"id": "x"})")), ParseError);
    }

    TEST_CASE("report json has the documented fields")
    {
        const auto r = classify(gen_cross_polytope_points(2), ThresholdMode::StrictLess, "hex");
        const Json j = report_to_json(r);
        for (const char* key : {"provenance", "mode", "vertices", "edges", "facets", "dimension", "pure", "closed",
                                "weak_pseudomanifold", "pseudomanifold", "normal_pseudomanifold", "cross_polytope", "chain",
                                "chain_reason", "wedge", "census", "betti", "euler", "crossing_pairs", "theorems"}) {
            CHECK_MESSAGE(j.contains(key), key);
        }
        CHECK(j["cross_polytope"] == 2);
        CHECK(j["betti"]["gf2"] == Json::parse("[1, 0, 1]"));
        CHECK(j["theorems"]["A"]["verdict"] == "consistent");
        CHECK(j["wedge"]["m"] == 1);
    }

    TEST_CASE("json parse errors name their origin")
    {
        try {
            parse_json("{", "input.json");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).rfind("input.json:", 0) == 0);
        }
    }
}
