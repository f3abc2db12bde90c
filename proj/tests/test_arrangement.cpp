#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bundling/arrangement.hpp"
#include "bundling/planarization.hpp"

using namespace bundling;

namespace {

// Two strings crossing once.
const char* kPlus = R"({
  "strings": [
    {"id": 0, "crossings": [0]},
    {"id": 1, "crossings": [0]}
  ],
  "crossings": [{"id": 0, "strings": [0, 1], "sign": 1}]
})";

// 4 horizontal and 4 vertical strings, crossing id 4*i+j for h_i x v_j.
std::string grid_instance(int a, int b) {
    std::string s = "{\"strings\":[";
    for (int i = 0; i < a; ++i) {
        s += "{\"id\":" + std::to_string(i) + ",\"crossings\":[";
        for (int j = 0; j < b; ++j) s += std::to_string(b * i + j) + (j + 1 < b ? "," : "");
        s += "]},";
    }
    for (int j = 0; j < b; ++j) {
        s += "{\"id\":" + std::to_string(a + j) + ",\"crossings\":[";
        for (int i = 0; i < a; ++i) s += std::to_string(b * i + j) + (i + 1 < a ? "," : "");
        s += "]}" + std::string(j + 1 < b ? "," : "");
    }
    s += "],\"crossings\":[";
    for (int k = 0; k < a * b; ++k) {
        int i = k / b, j = k % b;
        s += "{\"id\":" + std::to_string(k) + ",\"strings\":[" + std::to_string(i) + "," +
             std::to_string(a + j) + "],\"sign\":1}" + (k + 1 < a * b ? "," : "");
    }
    s += "]}";
    return s;
}

}  // namespace

TEST_CASE("parse and canonical serialization") {
    Arrangement arr = parse_instance(kPlus);
    CHECK(arr.strings.size() == 2);
    CHECK(arr.crossings.size() == 1);
    CHECK(arr.crossings[0].sign == 1);
    CHECK(!arr.is_colored());

    std::string once = to_json(arr);
    std::string twice = to_json(parse_instance(once));
    CHECK(once == twice);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_instance(R"({"strings":[{"id":0,"crossings":[0]}],
                           "crossings":[{"id":0,"strings":[0],"sign":1}]})"),
        doctest::Contains("crossing arity"), ParseError);
    // Crossing 0 never appears in string 1's sequence.
    CHECK_THROWS_AS(
        parse_instance(R"({"strings":[{"id":0,"crossings":[0]},{"id":1,"crossings":[]}],
                           "crossings":[{"id":0,"strings":[0,1],"sign":1}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"strings":[{"id":0,"crossings":[0]},{"id":1,"crossings":[0]}],
                           "crossings":[{"id":0,"strings":[0,1],"sign":2}]})"),
        ParseError);
}

TEST_CASE("uncrossed strings are dropped with a warning") {
    Arrangement arr = parse_instance(
        R"({"strings":[{"id":0,"crossings":[0]},{"id":1,"crossings":[0]},{"id":7,"crossings":[]}],
            "crossings":[{"id":0,"strings":[0,1],"sign":1}]})");
    CHECK(arr.strings.size() == 2);
    REQUIRE(arr.warnings.size() == 1);
    CHECK(arr.warnings[0] == "dropped uncrossed string 7");
}

TEST_CASE("split components: two disjoint crossings") {
    Arrangement arr = parse_instance(
        R"({"strings":[{"id":0,"crossings":[0]},{"id":1,"crossings":[0]},
                       {"id":2,"crossings":[1]},{"id":3,"crossings":[1]}],
            "crossings":[{"id":0,"strings":[0,1],"sign":1},
                         {"id":1,"strings":[2,3],"sign":1}]})");
    auto comps = split_components(arr);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].strings.size() == 2);
    CHECK(comps[1].crossings.size() == 1);
}

TEST_CASE("planarization of a single crossing") {
    Planarization p = build_planarization(parse_instance(kPlus));
    CHECK(p.V() == 5);
    CHECK(p.E() == 4);
    CHECK(p.F() == 1);
    CHECK(p.n_crossings == 1);
    CHECK(p.n_endpoints == 4);
    auto rot = p.map.rotation_at(0);
    CHECK(rot.size() == 4);
    CHECK(validate_pseudosegments(p).ok());
}

TEST_CASE("planarization of the 4x4 grid") {
    Planarization p = build_planarization(parse_instance(grid_instance(4, 4)));
    CHECK(p.V() == 32);
    CHECK(p.E() == 40);
    CHECK(p.F() == 10);
    CHECK(validate_pseudosegments(p).ok());

    auto deg = p.map.degree_table();
    for (int v = 0; v < p.n_crossings; ++v) CHECK(deg[v] == 4);
    for (int v = p.n_crossings; v < p.V(); ++v) CHECK(deg[v] == 1);
}

TEST_CASE("pseudosegment violations") {
    // Lens: two strings crossing twice.
    Planarization lens = build_planarization(parse_instance(
        R"({"strings":[{"id":0,"crossings":[0,1]},{"id":1,"crossings":[1,0]}],
            "crossings":[{"id":0,"strings":[0,1],"sign":1},
                         {"id":1,"strings":[0,1],"sign":-1}]})"));
    auto rep = validate_pseudosegments(lens);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == 'b');

    // Closed self-crossing string (a figure-eight).
    Planarization eight = build_planarization(parse_instance(
        R"({"strings":[{"id":0,"crossings":[0,0],"closed":true}],
            "crossings":[{"id":0,"strings":[0,0],"sign":1}]})"));
    auto rep2 = validate_pseudosegments(eight);
    REQUIRE(rep2.violations.size() == 2);
    CHECK(rep2.violations[0].kind == 'c');
    CHECK(rep2.violations[1].kind == 'a');
}

TEST_CASE("grounding the single crossing") {
    GroundedArrangement g = ground(build_planarization(parse_instance(kPlus)));
    CHECK(g.n_curves == 1);
    CHECK(g.curve_endpoints[0].size() == 4);
    CHECK(g.map.num_arcs() == 8);
    CHECK(g.map.faces.size() == 5);  // 4 quadrant cells + the curve interior
    REQUIRE(g.hole_cell[0] >= 0);
    CHECK(g.map.faces[g.hole_cell[0]].size() == 4);
}

TEST_CASE("grounding the 4x4 grid") {
    GroundedArrangement g = ground(build_planarization(parse_instance(grid_instance(4, 4))));
    CHECK(g.n_curves == 1);
    CHECK(g.curve_endpoints[0].size() == 16);
    // 9 interior squares + 16 boundary cells + the curve interior = 26;
    // Euler: 32 - 56 + F = 2.
    CHECK(g.map.num_arcs() == 56);
    CHECK(g.map.faces.size() == 26);
}

TEST_CASE("grounding refuses a disconnected drawing") {
    Arrangement arr = parse_instance(
        R"({"strings":[{"id":0,"crossings":[0]},{"id":1,"crossings":[0]},
                       {"id":2,"crossings":[1]},{"id":3,"crossings":[1]}],
            "crossings":[{"id":0,"strings":[0,1],"sign":1},
                         {"id":1,"strings":[2,3],"sign":1}]})");
    CHECK_THROWS_WITH_AS(ground(build_planarization(arr)), "split components first", ValidationError);
}
