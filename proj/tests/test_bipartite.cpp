#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bundling/bipartite.hpp"
#include "bundling/generate.hpp"

using namespace bundling;

namespace {

DualNet net_of(const std::string& json) {
    return build_net(ground(build_planarization(parse_instance(json))));
}

/// Number of tree components of S^ = S + loops at touched strong vertices.
int tree_components(const GainGraph& gb, const std::vector<int>& sel) {
    std::vector<bool> in_v(gb.vert_net.size(), false);
    for (int i : sel) in_v[gb.edges[i].first] = in_v[gb.edges[i].second] = true;
    std::vector<int> hat(sel);
    for (int i = gb.n_b; i < static_cast<int>(gb.edges.size()); ++i)
        if (in_v[gb.edges[i].first]) hat.push_back(i);
    auto [rk, null] = bicircular_nullity(gb, hat);
    // rk = |V| - tc, so recover tc
    std::set<int> verts;
    for (int i : hat) {
        verts.insert(gb.edges[i].first);
        verts.insert(gb.edges[i].second);
    }
    return static_cast<int>(verts.size()) - rk;
}

}  // namespace

TEST_CASE("colored grids are bipartite, uncolored ones are not") {
    CHECK(is_bipartite(net_of(gen_grid(4, 4, true))));
    CHECK(!is_bipartite(net_of(gen_grid(4, 4, false))));
}

TEST_CASE("crossing chords generate the same nets as hand-built instances") {
    // one blue and one red chord -> the single-crossing net
    DualNet n = net_of(gen_chords({{0, 2, Color::blue}, {1, 3, Color::red}}));
    CHECK(n.V() == 4);
    CHECK(n.E() == 4);
    CHECK(n.n_squares == 1);
    CHECK(is_bipartite(n));
}

TEST_CASE("grid color segments are the interior cross paths") {
    // duals of row arcs run vertically: the 4x4 grid has 3 interior columns
    // of 4 blue edges each (and symmetrically for red)
    DualNet n = net_of(gen_grid(4, 4, true));
    for (Color c : {Color::blue, Color::red}) {
        std::vector<Segment> b = color_segments(n, c);
        CHECK(b.size() == 3);
        for (const Segment& s : b) {
            CHECK(s.edges.size() == 4);
            CHECK(s.front.kind == SegmentEnd::at_border);
            CHECK(s.back.kind == SegmentEnd::at_border);
        }
    }
}

TEST_CASE("grid gain maximizer is empty and the pipeline returns one bundle") {
    DualNet n = net_of(gen_grid(4, 4, true));
    GainGraph gb = build_gain_graph(n, Color::blue);
    CHECK(gb.n_b == 3);
    CHECK(gb.num_loops() == 0);  // no positive-exponent vertices at all
    CHECK(max_gain_set(gb).empty());
    BipartiteResult res = bipartite_pipeline(n);
    CHECK(res.seed_size == 0);
    CHECK(res.gain.g == 0);
    CHECK(res.rect.R == 1);
}

TEST_CASE("weak and strong classification on random bipartite instances") {
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
        DualNet n = net_of(gen_random(6, seed, true));
        REQUIRE(is_bipartite(n));
        WeakStrongTable tb = classify_weak_strong(n, Color::blue);
        WeakStrongTable tr = classify_weak_strong(n, Color::red);
        for (int v = 0; v < n.V(); ++v) {
            if (n.exponent[v] <= 0) {
                CHECK(tb.cls[v] == -1);
                continue;
            }
            // weak in one color implies strong in the other, vertex-holes of
            // even degree are strong in both
            if (tb.cls[v] == 0) CHECK(tr.cls[v] == 1);
            if (n.vkind[v] == VertexKind::vertex_hole) {
                CHECK(n.degree[v] % 2 == 0);
                CHECK(tb.cls[v] == 1);
            }
        }
    }
}

TEST_CASE("gain formula matches the definition up to tree components") {
    // the closed formula undercounts by one per all-weak tree component of
    // S^; on sets without tree components the two agree exactly
    for (unsigned seed : {1u, 2u, 3u, 7u, 11u}) {
        DualNet n = net_of(gen_random(6, seed, true));
        for (Color c : {Color::blue, Color::red}) {
            GainGraph gb = build_gain_graph(n, c);
            if (gb.n_b > 12) continue;
            for (int mask = 0; mask < (1 << gb.n_b); ++mask) {
                std::vector<int> sel;
                std::vector<Segment> segs;
                for (int i = 0; i < gb.n_b; ++i)
                    if (mask >> i & 1) {
                        sel.push_back(i);
                        segs.push_back(gb.segments[i]);
                    }
                GainValue def = gain_def(n, segs);
                GainValue fml = gain_formula(gb, sel);
                int tc = tree_components(gb, sel);
                CHECK(def.g == fml.g + tc);
                if (tc == 0) CHECK(def.g == fml.g);
            }
        }
    }
}

TEST_CASE("the pruned maximizer beats every subset and has no leaves") {
    for (unsigned seed : {1u, 2u, 3u, 7u, 11u, 13u}) {
        DualNet n = net_of(gen_random(6, seed, true));
        for (Color c : {Color::blue, Color::red}) {
            GainGraph gb = build_gain_graph(n, c);
            std::vector<int> a = max_gain_set(gb);
            GainValue ga = gain_formula(gb, a);
            // g(A) equals the bicircular nullity of the whole edge set
            std::vector<int> all(gb.edges.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            CHECK(ga.g == bicircular_nullity(gb, all).second);
            CHECK(tree_components(gb, a) == 0);
            // no vertex of the selected subgraph is a leaf
            std::vector<int> deg(gb.vert_net.size(), 0);
            for (int i : a) {
                deg[gb.edges[i].first]++;
                deg[gb.edges[i].second]++;
                if (gb.strong_v[gb.edges[i].first]) deg[gb.edges[i].first] += 0;
            }
            for (size_t v = 0; v < deg.size(); ++v)
                if (deg[v] == 1) CHECK(gb.strong_v[v]);  // a loop saves it from being a leaf
            if (gb.n_b <= 12) {
                int best = 0;
                for (int mask = 0; mask < (1 << gb.n_b); ++mask) {
                    std::vector<Segment> segs;
                    for (int i = 0; i < gb.n_b; ++i)
                        if (mask >> i & 1) segs.push_back(gb.segments[i]);
                    best = std::max(best, gain_def(n, segs).g);
                }
                CHECK(ga.g == best);
            }
        }
    }
}

TEST_CASE("bipartite pipeline produces valid rectangulations") {
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        DualNet n = net_of(gen_random(7, seed, true));
        BipartiteResult res = bipartite_pipeline(n);
        CHECK(is_saturating(n, res.cutset));
        CHECK(res.rect.R - res.rect.S + res.rect.H == 2);
        CHECK(res.rect.S <= n.exp_total);
        // seeding never does worse than plain greedy
        Rectangulation plain = extract_rectangulation(n, greedy_rectangulate(n));
        CHECK(res.rect.S <= plain.S);
        SplitGains sg = split_gain_check(n, res.cutset);
        CHECK(sg.ok);
        CHECK(split_gain_check(n, plain.cutset).ok);
        Bundling b = to_bundling(n, res.rect);
        CHECK(b.R == res.rect.R);
    }
}

TEST_CASE("pipeline rejects uncolored nets") {
    DualNet n = net_of(gen_grid(3, 3, false));
    CHECK_THROWS_WITH_AS(bipartite_pipeline(n), doctest::Contains("not bipartite"),
                         ValidationError);
}
