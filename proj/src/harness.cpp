#include <sstream>

#include "bundling/bipartite.hpp"
#include "bundling/generate.hpp"
#include "bundling/harness.hpp"

namespace bundling {

namespace {

void fail(InstanceOutcome& out, const std::string& note) {
    out.ok = false;
    if (out.note.empty()) out.note = note;
}

/// a/b > c/d for non-negative fractions with positive denominators.
bool ratio_gt(std::pair<int, int> a, std::pair<int, int> b) {
    return static_cast<long>(a.first) * b.second > static_cast<long>(b.first) * a.second;
}

}  // namespace

std::string InstanceOutcome::tsv() const {
    std::ostringstream os;
    os << family << '\t' << seed << '\t' << squares << '\t' << H << '\t' << t << '\t' << S_greed
       << '\t' << R_greed << '\t' << S_bip << '\t' << R_bip << '\t' << R_opt << '\t' << S_opt
       << '\t' << (ok ? "ok" : "FAIL") << '\t' << (note.empty() ? "-" : note);
    return os.str();
}

std::string HarnessReport::tsv_header() {
    return "family\tseed\tsquares\tH\tt\tS_greed\tR_greed\tS_bip\tR_bip\tR_opt\tS_opt\tstatus\tnote";
}

std::string HarnessReport::summary() const {
    std::ostringstream os;
    os << "instances\t" << outcomes.size() << "\n";
    os << "failures\t" << failures << "\n";
    auto ratio = [&os](const char* name, std::pair<int, int> r) {
        os << name << '\t' << r.first << '/' << r.second << '\t'
           << (r.second ? static_cast<double>(r.first) / r.second : 0.0) << "\n";
    };
    ratio("worst_Rgreed_over_Ropt", worst_R);
    ratio("worst_Sgreed_over_Sopt", worst_S);
    ratio("worst_Sbip_over_Sopt", worst_bip_S);
    return os.str();
}

InstanceOutcome process_instance(const HarnessItem& item, int cap) {
    InstanceOutcome out;
    out.family = item.family;
    out.seed = item.seed;
    out.ok = true;
    try {
        Planarization plan = build_planarization(parse_instance(item.json));
        ValidationReport vr = validate_pseudosegments(plan);
        bool rejected = !vr.ok();
        DualNet n;
        if (!rejected) {
            n = build_net(ground(plan));
            rejected = !detect_forbidden_patterns(n).ok();
        }
        if (item.expect_reject) {
            if (!rejected) fail(out, "negative instance was not rejected");
            return out;
        }
        if (rejected) {
            fail(out, !vr.ok() ? vr.violations[0].detail : detect_forbidden_patterns(n).findings[0]);
            return out;
        }
        out.squares = n.n_squares;
        out.H = n.H;
        out.t = detect_toothed_holes(n);
        if (item.family == "circular" && out.t != 0) fail(out, "circular instance with t > 0");

        Rectangulation greedy = extract_rectangulation(n, greedy_rectangulate(n));
        out.S_greed = greedy.S;
        out.R_greed = greedy.R;
        if (greedy.R - greedy.S + greedy.H != 2) fail(out, "Euler identity violated");
        GammaReport gr = gamma_checks(build_gamma(n, greedy));
        if (!gr.ok()) fail(out, "verification graph check failed");
        Bundling b = to_bundling(n, greedy);
        size_t covered = 0;
        for (const auto& bun : b.bundles) covered += bun.size();
        if (static_cast<int>(covered) != n.n_squares) fail(out, "bundles do not cover the crossings");

        BipartiteResult bip;
        bool have_bip = n.is_colored() && is_bipartite(n);
        if (have_bip) {
            bip = bipartite_pipeline(n);
            out.S_bip = bip.rect.S;
            out.R_bip = bip.rect.R;
        }
        if (n.n_squares <= oracle_cap(cap)) {
            OptStats opt = brute_force_min_rectangulation(n, cap);
            out.R_opt = opt.R_opt;
            out.S_opt = opt.S_opt;
            InequalityReport rep = verify_inequalities(n, greedy, opt, have_bip ? &bip : nullptr);
            for (const Check& c : rep.checks)
                if (!c.pass()) fail(out, "bound violated: " + c.name);
        }
    } catch (const std::exception& e) {
        if (item.expect_reject)
            out.ok = true;  // thrown rejection is a rejection
        else
            fail(out, e.what());
    }
    return out;
}

HarnessReport run_harness(const std::vector<HarnessItem>& items, int cap, bool parallel) {
    HarnessReport rep;
    rep.outcomes.resize(items.size());
    int count = static_cast<int>(items.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) rep.outcomes[i] = process_instance(items[i], cap);
    } else {
        for (int i = 0; i < count; ++i) rep.outcomes[i] = process_instance(items[i], cap);
    }
    for (const InstanceOutcome& o : rep.outcomes) {
        if (!o.ok) rep.failures++;
        if (o.R_opt > 0 && ratio_gt({o.R_greed, o.R_opt}, rep.worst_R))
            rep.worst_R = {o.R_greed, o.R_opt};
        if (o.S_opt > 0 && ratio_gt({o.S_greed, o.S_opt}, rep.worst_S))
            rep.worst_S = {o.S_greed, o.S_opt};
        if (o.S_opt > 0 && o.S_bip >= 0 && ratio_gt({o.S_bip, o.S_opt}, rep.worst_bip_S))
            rep.worst_bip_S = {o.S_bip, o.S_opt};
    }
    return rep;
}

std::vector<HarnessItem> default_suite(unsigned seed, int n_circular) {
    std::vector<HarnessItem> items;
    for (int i = 0; i < n_circular; ++i) {
        unsigned s = seed + i;
        int n = 3 + static_cast<int>(s % 6);  // 3..8 chords
        items.push_back({"circular", s, gen_random(n, s, s % 3 == 0)});
    }
    for (int a = 2; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            items.push_back({"grid", static_cast<unsigned>(10 * a + b), gen_grid(a, b, a % 2 == 0)});
    for (int k = 1; k <= 10; ++k)
        items.push_back({"toothed", static_cast<unsigned>(k), gen_toothed(k, k % 2 == 0)});
    for (unsigned s = 1; s <= 40; ++s) items.push_back({"bilaminar", s, gen_bilaminar(s)});
    items.push_back({"c4xc4", 0, gen_c4xc4()});
    items.push_back({"ring", 0, gen_ring(), true});
    items.push_back({"loop", 0, gen_loop(), true});
    return items;
}

}  // namespace bundling
