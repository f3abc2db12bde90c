#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bundling/rectangulation.hpp"

using namespace bundling;

namespace {

DualNet net_of(const std::string& json) {
    return build_net(ground(build_planarization(parse_instance(json))));
}

const char* kPlus = R"({
  "strings": [
    {"id": 0, "crossings": [0]},
    {"id": 1, "crossings": [0]}
  ],
  "crossings": [{"id": 0, "strings": [0, 1], "sign": 1}]
})";

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

TEST_CASE("grids are already saturated: greedy returns the empty cut-set") {
    for (const std::string& js : {std::string(kPlus), grid_instance(4, 4)}) {
        DualNet n = net_of(js);
        CutSet cs = greedy_rectangulate(n);
        CHECK(cs.size() == 0);
        CHECK(is_saturating(n, cs));
        Rectangulation r = extract_rectangulation(n, cs);
        CHECK(r.R == 1);
        CHECK(r.S == 0);
        CHECK(r.H == 1);
        CHECK(r.R - r.S + r.H == 2);
        CHECK(static_cast<int>(r.rect_squares[0].size()) == n.n_squares);
        Bundling b = to_bundling(n, r);
        CHECK(b.bundles.size() == 1);
        CHECK(static_cast<int>(b.bundles[0].size()) == n.n_squares);
    }
}

TEST_CASE("empty cut-set on the 4x4 grid yields one 4x4 rectangle") {
    DualNet n = net_of(grid_instance(4, 4));
    Rectangulation r = extract_rectangulation(n, CutSet(n));
    CHECK(r.R == 1);
    CHECK(r.rect_dims[0] == std::pair<int, int>(4, 4));
    Bundling b = to_bundling(n, r);
    std::set<int> ids(b.bundles[0].begin(), b.bundles[0].end());
    CHECK(ids.size() == 16);
    CHECK(*ids.begin() == 0);
    CHECK(*ids.rbegin() == 15);
}

TEST_CASE("shooting across the 2x2 grid net produces one full segment") {
    DualNet n = net_of(grid_instance(2, 2));
    // net is the 3x3 grid graph; the centre vertex is the only regular one
    int centre = -1;
    for (int v = 0; v < n.V(); ++v)
        if (n.vkind[v] == VertexKind::regular) centre = v;
    REQUIRE(centre != -1);
    CutSet cs(n);
    // shoot from a border vertex along its interior edge: the shot passes
    // straight through the centre and ends at the opposite border vertex
    int v0 = -1, e0 = -1;
    for (int h : n.rotation(centre)) {
        v0 = n.net.origin[PlaneMap::twin(h)];
        e0 = h / 2;
        break;
    }
    REQUIRE(!n.border_edge[e0]);
    Segment s = shoot_segment(n, v0, e0, cs);
    CHECK(s.edges.size() == 2);
    CHECK(s.vertices.size() == 3);
    CHECK(s.vertices[1] == centre);
    CHECK(s.front.kind == SegmentEnd::at_border);
    CHECK(s.back.kind == SegmentEnd::at_border);
    cs.add(s);
    CHECK(cs.interior_vertex[centre]);
    CHECK_THROWS_WITH_AS(shoot_segment(n, v0, s.edges[0], cs),
                         doctest::Contains("already covered"), ValidationError);

    Rectangulation r = extract_rectangulation(n, cs);
    CHECK(r.R == 2);
    CHECK(r.S == 1);
    CHECK(r.H == 1);
    for (auto [a, b] : r.rect_dims) CHECK(a * b == 2);
}

TEST_CASE("delimiting cut-set of a 2x1 split of the 2x2 grid has one segment") {
    DualNet n = net_of(grid_instance(2, 2));
    // crossings k = 2i + j; split into rows i = 0 and i = 1
    std::vector<int> rect_of_square(4);
    for (int k = 0; k < 4; ++k) rect_of_square[k] = k / 2;
    CutSet cs = delimiting_cutset(n, rect_of_square);
    CHECK(cs.size() == 1);
    CHECK(cs.segments[0].edges.size() == 2);
    CHECK(is_saturating(n, cs));
    Rectangulation r = extract_rectangulation(n, cs);
    CHECK(r.R == 2);
    std::set<std::set<int>> rows;
    Bundling b = to_bundling(n, r);
    for (const auto& bun : b.bundles) rows.insert(std::set<int>(bun.begin(), bun.end()));
    CHECK(rows == std::set<std::set<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("delimiting cut-set of the all-singletons partition covers every interior edge") {
    DualNet n = net_of(grid_instance(3, 3));
    std::vector<int> rect_of_square(9);
    for (int k = 0; k < 9; ++k) rect_of_square[k] = k;
    CutSet cs = delimiting_cutset(n, rect_of_square);
    for (int e = 0; e < n.E(); ++e) CHECK(cs.covered[e] == !n.border_edge[e]);
    Rectangulation r = extract_rectangulation(n, cs);
    CHECK(r.R == 9);
    CHECK(r.R - r.S + r.H == 2);
    // round trip: delimiting the extracted partition reproduces the cover
    CutSet cs2 = delimiting_cutset(n, r.rect_of_square);
    CHECK(cs2.covered == cs.covered);
}

TEST_CASE("extraction rejects a non-saturating cut-set") {
    // two closed curves crossing four times: the four squares form a ring
    // around two vertex-holes, and the empty cut-set does not saturate
    DualNet n = net_of(
        R"({"strings":[{"id":0,"crossings":[0,1,2,3],"closed":true},
                       {"id":1,"crossings":[0,1,2,3],"closed":true}],
            "crossings":[{"id":0,"strings":[0,1],"sign":1},
                         {"id":1,"strings":[0,1],"sign":-1},
                         {"id":2,"strings":[0,1],"sign":1},
                         {"id":3,"strings":[0,1],"sign":-1}]})");
    CHECK_THROWS_WITH_AS(extract_rectangulation(n, CutSet(n)), doctest::Contains("not saturating"),
                         ValidationError);
    // on a square-ring a saturating cut-set need not delimit a
    // rectangulation; the grid labeling rejects the wrap-around face
    CutSet cs = greedy_rectangulate(n);
    CHECK(is_saturating(n, cs));
    CHECK_THROWS_WITH_AS(extract_rectangulation(n, cs), doctest::Contains("non-rectangular"),
                         ValidationError);
    CHECK(!detect_forbidden_patterns(n).ok());
}

TEST_CASE("greedy uses at most the exponent total on every instance") {
    for (const std::string& js :
         {grid_instance(2, 3), grid_instance(3, 3), grid_instance(4, 2)}) {
        DualNet n = net_of(js);
        CutSet cs = greedy_rectangulate(n);
        CHECK(cs.size() <= n.exp_total);
        CHECK(is_saturating(n, cs));
    }
}

TEST_CASE("gamma graph of the trivial rectangulation is degenerate") {
    DualNet n = net_of(grid_instance(4, 4));
    Rectangulation r = extract_rectangulation(n, CutSet(n));
    GammaGraph g = build_gamma(n, r);
    CHECK(g.degenerate);
    GammaReport rep = gamma_checks(g);
    CHECK(rep.ok());
    CHECK(!rep.simple);
}

TEST_CASE("gamma graph of a 2x1 split of the 2x2 grid passes all checks") {
    DualNet n = net_of(grid_instance(2, 2));
    std::vector<int> rect_of_square{0, 0, 1, 1};
    CutSet cs = delimiting_cutset(n, rect_of_square);
    Rectangulation r = extract_rectangulation(n, cs);
    GammaGraph g = build_gamma(n, r);
    CHECK(!g.degenerate);
    CHECK(g.num_vertices == 2 * r.S);
    CHECK(g.num_edges() == 3 * r.S);
    CHECK(g.num_faces() == r.R + r.H);
    GammaReport rep = gamma_checks(g);
    CHECK(rep.cubic);
    CHECK(rep.counts_ok);
    CHECK(rep.holes_independent);
    // a single segment means multiedges are expected
    CHECK(!rep.simple_expected);
    CHECK(rep.ok());
}

TEST_CASE("gamma graph of the all-singletons 3x3 partition passes all checks") {
    DualNet n = net_of(grid_instance(3, 3));
    std::vector<int> rect_of_square(9);
    for (int k = 0; k < 9; ++k) rect_of_square[k] = k;
    CutSet cs = delimiting_cutset(n, rect_of_square);
    Rectangulation r = extract_rectangulation(n, cs);
    GammaGraph g = build_gamma(n, r);
    GammaReport rep = gamma_checks(g);
    CHECK(rep.cubic);
    CHECK(rep.counts_ok);
    CHECK(rep.dual_triangulated);
    CHECK(rep.holes_independent);
    CHECK(rep.simple == rep.simple_expected);
    CHECK(rep.ok());
    // monochromatic path count equals the segment count
    std::set<int> segs;
    for (int c : g.edge_segment)
        if (c != -1) segs.insert(c);
    CHECK(static_cast<int>(segs.size()) == r.S);
}

TEST_CASE("bundling serialization is canonical") {
    DualNet n = net_of(kPlus);
    Bundling b = to_bundling(n, extract_rectangulation(n, CutSet(n)));
    CHECK(bundling_to_json(b) ==
          "{\n  \"bundles\": [\n    [\n      0\n    ]\n  ],\n  \"R\": 1,\n  \"S\": 0,\n  \"H\": "
          "1,\n  \"t\": 0\n}\n");
}
