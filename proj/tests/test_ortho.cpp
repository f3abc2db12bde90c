#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bundling/generate.hpp"
#include "bundling/oracle.hpp"
#include "bundling/ortho.hpp"

using namespace bundling;

namespace {

OrthoPolygon poly(std::initializer_list<Cell> cells) { return {std::set<Cell>(cells)}; }

DualNet net_of(const std::string& json) {
    return build_net(ground(build_planarization(parse_instance(json))));
}

}  // namespace

TEST_CASE("validation rejects malformed cell sets") {
    CHECK_THROWS_WITH_AS(poly({}).validate(), doctest::Contains("degenerate"), ValidationError);
    CHECK_THROWS_WITH_AS(poly({{0, 0}, {2, 0}}).validate(), doctest::Contains("disconnected"),
                         ValidationError);
    // a U of cells whose tips meet only at a corner
    OrthoPolygon u = poly({{0, 0}, {1, 1}, {0, -1}, {1, -1}, {2, -1}, {2, 0}, {2, 1}});
    CHECK_THROWS_WITH_AS(u.validate(), doctest::Contains("pinch"), ValidationError);
    OrthoPolygon ring;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != 1 || y != 1) ring.cells.insert({x, y});
    CHECK_THROWS_WITH_AS(ring.validate(), doctest::Contains("interior hole"), ValidationError);
}

TEST_CASE("rectangles need no cuts") {
    OrthoPolygon p;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 3; ++y) p.cells.insert({x, y});
    CHECK(p.concave_corners().empty());
    OrthoResult r = ortho_exact(p);
    CHECK(r.S == 0);
    CHECK(r.R == 1);
}

TEST_CASE("the L-shape takes one cut, the plus-shape two") {
    OrthoPolygon l = poly({{0, 0}, {1, 0}, {0, 1}});
    CHECK(l.concave_corners().size() == 1);
    OrthoResult rl = ortho_exact(l);
    CHECK(rl.S == 1);
    CHECK(rl.R == 2);

    OrthoPolygon plus = poly({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}});
    CHECK(plus.concave_corners().size() == 4);
    CHECK(good_segments(plus).size() == 4);
    OrthoResult rp = ortho_exact(plus);
    CHECK(rp.S == 2);
    CHECK(rp.R == 3);
    // the two independent good segments are parallel
    CHECK(rp.segments[0].horizontal() == rp.segments[1].horizontal());
}

TEST_CASE("exact matches the cell-level brute force on random polygons") {
    for (unsigned seed = 1; seed <= 200; ++seed) {
        OrthoPolygon p = gen_ortho(seed, 24);
        p.validate();
        OrthoResult r = ortho_exact(p);
        CHECK(r.R == r.S + 1);
        CHECK(r.R == ortho_brute_force_rects(p));
    }
}

TEST_CASE("greedy stays within twice the optimum") {
    int worst_g = 0, worst_e = 1;
    for (unsigned seed = 1; seed <= 200; ++seed) {
        OrthoPolygon p = gen_ortho(seed);
        OrthoResult g = ortho_greedy(p);
        OrthoResult e = ortho_exact(p);
        CHECK(g.R == g.S + 1);
        CHECK(g.R >= e.R);
        CHECK(g.R <= 2 * e.R);
        if (g.R * worst_e > worst_g * e.R) {
            worst_g = g.R;
            worst_e = e.R;
        }
    }
    MESSAGE("worst greedy/exact ratio: ", worst_g, "/", worst_e);
}

TEST_CASE("polygon generation is deterministic") {
    for (unsigned seed : {3u, 17u}) {
        OrthoPolygon a = gen_ortho(seed), b = gen_ortho(seed);
        CHECK(a.cells == b.cells);
    }
}

TEST_CASE("bilaminar drawings mirror their polygon exactly") {
    for (unsigned seed : {1u, 3u, 4u, 5u, 9u}) {
        OrthoPolygon p = gen_ortho(seed);
        DualNet n = net_of(gen_bilaminar(seed));
        CHECK(is_bipartite(n));
        CHECK(n.n_squares == static_cast<int>(p.cells.size()));
        if (n.n_squares > oracle_cap()) continue;
        OptStats opt = brute_force_min_rectangulation(n);
        CHECK(opt.R_opt == ortho_exact(p).R);
    }
}
