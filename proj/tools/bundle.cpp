#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "bundling/generate.hpp"
#include "bundling/harness.hpp"
#include "bundling/render.hpp"

using namespace bundling;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

DualNet net_of(const std::string& json) {
    return build_net(ground(build_planarization(parse_instance(json))));
}

std::vector<int> vertex_order(const DualNet& n, const std::string& order, unsigned seed) {
    std::vector<int> ids(n.V());
    std::iota(ids.begin(), ids.end(), 0);
    if (order == "random") std::shuffle(ids.begin(), ids.end(), std::mt19937(seed));
    return ids;
}

std::string stats_tsv(const DualNet& n, const Rectangulation& r, const Bundling& b) {
    std::ostringstream os;
    os << "squares\tV\tE\tF\tH\tH_odd\tt\texp_total\tS\tR\tbundles\n"
       << n.n_squares << '\t' << n.V() << '\t' << n.E() << '\t' << n.F() << '\t' << n.H << '\t'
       << n.H_odd << '\t' << detect_toothed_holes(n) << '\t' << n.exp_total << '\t' << r.S << '\t'
       << r.R << '\t' << b.bundles.size() << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bundlings of good drawings via dual-net rectangulation"};
    app.require_subcommand(1);

    std::string family, input = "-", output = "-", order = "id", format = "json", svg_path,
                stage = "bundling";
    unsigned seed = 1;
    int n_chords = 5, grid_a = 4, grid_b = 4, teeth = 3, cap = -1, count = 1000;
    bool colored = false, bipartite_gen = false, serial = false, per_instance = false;

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family, "circular|bilaminar|grid|toothed|c4xc4|ring|loop")
        ->required();
    gen->add_option("--n", n_chords, "chords (circular)");
    gen->add_option("--a", grid_a, "grid rows");
    gen->add_option("--b", grid_b, "grid columns");
    gen->add_option("--k", teeth, "teeth (toothed)");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_flag("--colored", colored, "color the strings (grid, toothed)");
    gen->add_flag("--bipartite", bipartite_gen, "require a 2-colorable instance (circular)");
    gen->add_option("--out", output, "output path, - for stdout");

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "instance file, - for stdin");
    };
    auto* build = app.add_subcommand("build-net", "build and dump the dual net");
    add_input(build);

    auto* greedy = app.add_subcommand("greedy", "greedy rectangulation and bundling");
    add_input(greedy);
    greedy->add_option("--order", order, "vertex order: id|random")
        ->check(CLI::IsMember({"id", "random"}));
    greedy->add_option("--seed", seed, "seed for --order random");
    greedy->add_option("--format", format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    greedy->add_option("--svg", svg_path, "also write an SVG rendering");

    auto* bip = app.add_subcommand("bipartite", "gain-seeded pipeline for colored instances");
    add_input(bip);
    bip->add_option("--format", format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    bip->add_option("--svg", svg_path, "also write an SVG rendering");

    auto* exact = app.add_subcommand("exact", "brute-force optimum");
    add_input(exact);
    exact->add_option("--oracle-cap", cap, "max squares for the oracle");
    exact->add_option("--format", format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));

    auto* verify = app.add_subcommand("verify", "check every bound against the oracle");
    add_input(verify);
    verify->add_option("--oracle-cap", cap, "max squares for the oracle");

    auto* render = app.add_subcommand("render", "SVG rendering");
    add_input(render);
    render->add_option("--svg", svg_path, "output path, - for stdout");
    render->add_option("--stage", stage, "instance|greedy|bundling")
        ->check(CLI::IsMember({"instance", "greedy", "bundling"}));

    auto* harness = app.add_subcommand("harness", "batch verification over generated suites");
    harness->add_option("--count", count, "number of circular instances");
    harness->add_option("--seed", seed, "suite seed");
    harness->add_option("--oracle-cap", cap, "max squares for the oracle");
    harness->add_flag("--serial", serial, "serial reference path instead of OpenMP");
    harness->add_flag("--tsv", per_instance, "print one TSV line per instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            std::string js;
            if (family == "circular")
                js = gen_random(n_chords, seed, bipartite_gen);
            else if (family == "bilaminar")
                js = gen_bilaminar(seed);
            else if (family == "grid")
                js = gen_grid(grid_a, grid_b, colored);
            else if (family == "toothed")
                js = gen_toothed(teeth, colored);
            else if (family == "c4xc4")
                js = gen_c4xc4();
            else if (family == "ring")
                js = gen_ring();
            else if (family == "loop")
                js = gen_loop();
            else
                throw std::runtime_error("unknown family " + family);
            spit(output, js);
        } else if (build->parsed()) {
            DualNet n = net_of(slurp(input));
            std::cout << dump_net(n);
        } else if (greedy->parsed()) {
            DualNet n = net_of(slurp(input));
            std::vector<int> ids = vertex_order(n, order, seed);
            Rectangulation r = extract_rectangulation(n, greedy_rectangulate(n, nullptr, &ids));
            Bundling b = to_bundling(n, r);
            std::cout << (format == "tsv" ? stats_tsv(n, r, b) : bundling_to_json(b));
            if (!svg_path.empty()) spit(svg_path, render_svg(n, &r, &b));
        } else if (bip->parsed()) {
            DualNet n = net_of(slurp(input));
            BipartiteResult res = bipartite_pipeline(n);
            Bundling b = to_bundling(n, res.rect);
            if (format == "tsv") {
                SplitGains sg = split_gain_check(n, res.cutset);
                std::cout << "color\tgain\tseed_size\tS\tR\tsaturating\teuler_ok\tsplit_ok\n"
                          << color_name(res.color) << '\t' << res.gain.g << '\t' << res.seed_size
                          << '\t' << res.rect.S << '\t' << res.rect.R << '\t'
                          << is_saturating(n, res.cutset) << '\t'
                          << (res.rect.R - res.rect.S + res.rect.H == 2) << '\t' << sg.ok << '\n';
            } else {
                std::cout << bundling_to_json(b);
            }
            if (!svg_path.empty()) spit(svg_path, render_svg(n, &res.rect, &b));
        } else if (exact->parsed()) {
            DualNet n = net_of(slurp(input));
            OptStats opt = brute_force_min_rectangulation(n, cap);
            if (format == "tsv")
                std::cout << "R_opt\tS_opt\tS_opt_any\tdelta\tH\tH_odd\tH_2\tt\tn_optimal\n"
                          << opt.R_opt << '\t' << opt.S_opt << '\t' << opt.S_opt_anychoice << '\t'
                          << opt.delta << '\t' << opt.H << '\t' << opt.H_odd << '\t' << opt.H_2
                          << '\t' << opt.t << '\t' << opt.n_optimal << '\n';
            else
                std::cout << bundling_to_json(to_bundling(n, opt.witness));
        } else if (verify->parsed()) {
            std::string js = slurp(input);
            Planarization plan = build_planarization(parse_instance(js));
            ValidationReport vr = validate_pseudosegments(plan);
            if (!vr.ok()) {
                for (const auto& v : vr.violations)
                    std::cout << "rejected\t" << v.kind << '\t' << v.detail << '\n';
                return 1;
            }
            DualNet n = build_net(ground(plan));
            PatternReport pr = detect_forbidden_patterns(n);
            if (!pr.ok()) {
                for (const auto& f : pr.findings) std::cout << "rejected\t" << f << '\n';
                return 1;
            }
            Rectangulation r = extract_rectangulation(n, greedy_rectangulate(n));
            if (n.n_squares > oracle_cap(cap)) {
                std::cout << "oracle skipped: " << n.n_squares << " squares over the cap\n";
                return 0;
            }
            OptStats opt = brute_force_min_rectangulation(n, cap);
            BipartiteResult bres;
            bool have_bip = n.is_colored() && is_bipartite(n);
            if (have_bip) bres = bipartite_pipeline(n);
            InequalityReport rep = verify_inequalities(n, r, opt, have_bip ? &bres : nullptr);
            std::cout << rep.to_tsv();
            std::cout << (rep.ok() ? "all bounds hold\n" : "BOUND VIOLATION\n");
            return rep.ok() ? 0 : 1;
        } else if (render->parsed()) {
            DualNet n = net_of(slurp(input));
            if (stage == "instance") {
                spit(svg_path.empty() ? "-" : svg_path, render_svg(n));
            } else {
                Rectangulation r = extract_rectangulation(n, greedy_rectangulate(n));
                Bundling b = to_bundling(n, r);
                spit(svg_path.empty() ? "-" : svg_path,
                     render_svg(n, &r, stage == "bundling" ? &b : nullptr));
            }
        } else if (harness->parsed()) {
            HarnessReport rep = run_harness(default_suite(seed, count), cap, !serial);
            if (per_instance) {
                std::cout << HarnessReport::tsv_header() << '\n';
                for (const InstanceOutcome& o : rep.outcomes) std::cout << o.tsv() << '\n';
            } else {
                for (const InstanceOutcome& o : rep.outcomes)
                    if (!o.ok) std::cout << o.tsv() << '\n';
            }
            std::cout << rep.summary();
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
