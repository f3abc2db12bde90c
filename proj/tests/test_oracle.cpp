#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "bundling/generate.hpp"
#include "bundling/oracle.hpp"

using namespace bundling;

namespace {

DualNet net_of(const std::string& json) {
    return build_net(ground(build_planarization(parse_instance(json))));
}

}  // namespace

TEST_CASE("cap resolution: flag, then environment, then default") {
    unsetenv("BUNDLE_ORACLE_CAP");
    CHECK(oracle_cap() == 20);
    CHECK(oracle_cap(7) == 7);
    setenv("BUNDLE_ORACLE_CAP", "13", 1);
    CHECK(oracle_cap() == 13);
    CHECK(oracle_cap(7) == 7);
    unsetenv("BUNDLE_ORACLE_CAP");
}

TEST_CASE("grids have a unique optimum: the whole grid") {
    for (auto [a, b] : {std::pair{2, 2}, {3, 3}, {4, 4}, {2, 5}}) {
        DualNet n = net_of(gen_grid(a, b));
        OptStats opt = brute_force_min_rectangulation(n);
        CHECK(opt.R_opt == 1);
        CHECK(opt.S_opt == 0);
        CHECK(opt.S_opt_anychoice == 0);
        CHECK(opt.n_optimal == 1);
        CHECK(opt.H == 1);
        CHECK(opt.witness.R == 1);
        auto [da, db] = opt.witness.rect_dims[0];
        CHECK(std::minmax(da, db) == std::minmax(a, b));
    }
}

TEST_CASE("the oracle refuses instances above the cap") {
    DualNet n = net_of(gen_grid(4, 4));
    CHECK_THROWS_WITH_AS(brute_force_min_rectangulation(n, 15),
                         doctest::Contains("too large"), ValidationError);
    // and the environment variable is honoured when no flag is given
    setenv("BUNDLE_ORACLE_CAP", "15", 1);
    CHECK_THROWS_WITH_AS(brute_force_min_rectangulation(n),
                         doctest::Contains("too large"), ValidationError);
    unsetenv("BUNDLE_ORACLE_CAP");
}

TEST_CASE("oracle witness round-trips through the delimiting cut-set") {
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
        DualNet n = net_of(gen_random(6, seed));
        OptStats opt = brute_force_min_rectangulation(n);
        const Rectangulation& w = opt.witness;
        CHECK(w.R == opt.R_opt);
        CHECK(w.S == opt.S_opt);
        CHECK(w.R - w.S + w.H == 2);
        Rectangulation again =
            extract_rectangulation(n, delimiting_cutset(n, w.rect_of_square));
        CHECK(again.R == w.R);
        CHECK(again.S == w.S);
        CHECK(opt.S_opt_anychoice <= opt.S_opt);
        CHECK(opt.delta <= w.min_hole_segments());
    }
}

TEST_CASE("every bound holds on random instances") {
    for (unsigned seed = 1; seed <= 12; ++seed) {
        DualNet n = net_of(gen_random(6, seed));
        Rectangulation greedy = extract_rectangulation(n, greedy_rectangulate(n));
        OptStats opt = brute_force_min_rectangulation(n);
        InequalityReport rep = verify_inequalities(n, greedy, opt);
        if (!rep.ok()) MESSAGE(rep.to_tsv());
        CHECK(rep.ok());
    }
}

TEST_CASE("every bound holds on random bipartite instances, including the 9/2 one") {
    for (unsigned seed = 1; seed <= 8; ++seed) {
        DualNet n = net_of(gen_random(6, seed, true));
        Rectangulation greedy = extract_rectangulation(n, greedy_rectangulate(n));
        OptStats opt = brute_force_min_rectangulation(n);
        BipartiteResult bip = bipartite_pipeline(n);
        InequalityReport rep = verify_inequalities(n, greedy, opt, &bip);
        if (!rep.ok()) MESSAGE(rep.to_tsv());
        CHECK(rep.ok());
        bool saw_bip = false;
        for (const Check& c : rep.checks) saw_bip |= c.name.find("bip") != std::string::npos;
        CHECK(saw_bip);
    }
}

TEST_CASE("toothed instances keep the optimum at two while holes grow") {
    for (int k = 1; k <= 4; ++k) {
        DualNet n = net_of(gen_toothed(k));
        CHECK(n.H == k + 1);
        CHECK(detect_toothed_holes(n) == k);
        OptStats opt = brute_force_min_rectangulation(n);
        CHECK(opt.R_opt == 2);
        CHECK(opt.t == k);
        Rectangulation greedy = extract_rectangulation(n, greedy_rectangulate(n));
        InequalityReport rep = verify_inequalities(n, greedy, opt);
        if (!rep.ok()) MESSAGE(rep.to_tsv());
        CHECK(rep.ok());
    }
}

TEST_CASE("brute-force gain maximum agrees with the pruned maximizer") {
    for (unsigned seed : {1u, 2u, 3u, 5u, 8u}) {
        DualNet n = net_of(gen_random(6, seed, true));
        for (Color c : {Color::blue, Color::red}) {
            GainGraph gb = build_gain_graph(n, c);
            auto [best_set, best_g] = brute_force_max_gain(n, gb);
            std::vector<int> a = max_gain_set(gb);
            CHECK(best_g == gain_formula(gb, a).g);
            // the brute-force winner is itself optimal under the formula
            std::vector<Segment> segs;
            for (int i : best_set) segs.push_back(gb.segments[i]);
            CHECK(gain_def(n, segs).g == best_g);
        }
    }
}

TEST_CASE("the inequality report serializes one line per check") {
    DualNet n = net_of(gen_grid(3, 3));
    Rectangulation greedy = extract_rectangulation(n, greedy_rectangulate(n));
    OptStats opt = brute_force_min_rectangulation(n);
    InequalityReport rep = verify_inequalities(n, greedy, opt);
    std::string tsv = rep.to_tsv();
    size_t lines = std::count(tsv.begin(), tsv.end(), '\n');
    CHECK(lines == rep.checks.size() + 1);  // header + rows
    CHECK(tsv.find("pass") != std::string::npos);
}
