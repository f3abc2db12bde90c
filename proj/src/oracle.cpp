#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bundling/oracle.hpp"

namespace bundling {

int oracle_cap(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("BUNDLE_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

namespace {

// Step from square face f (orientation rho) to the neighbour in grid
// direction d, propagating the orientation exactly as the grid labeling
// does; nullopt when the edge leads out of the squares.
std::optional<std::pair<int, int>> grid_step(const DualNet& n, int f, int rho, int d) {
    int k = (d - rho + 8) % 4;
    int h = n.net.faces[f][k];
    if (n.border_edge[h / 2]) return std::nullopt;
    int tw = PlaneMap::twin(h);
    int g = n.net.face_of[tw];
    if (!n.is_square(g)) return std::nullopt;
    const auto& gwalk = n.net.faces[g];
    int j = -1;
    for (int i = 0; i < 4; ++i)
        if (gwalk[i] == tw) j = i;
    return std::make_pair(g, ((d + 2) - j + 8) % 4);
}

// All square subsets that form a rectangle, as bitmasks over crossing
// indices, bucketed by their lowest set bit.
std::vector<std::vector<uint64_t>> enumerate_rectangles(const DualNet& n) {
    int S = n.n_squares;
    std::set<uint64_t> seen;
    for (int anchor = 0; anchor < S; ++anchor) {
        int f0 = n.square_face[anchor];
        for (int quad = 0; quad < 4; ++quad) {
            int dx = quad, dy = (quad + 1) % 4;
            for (int a = 1; a <= S; ++a) {
                for (int b = 1; a * b <= S; ++b) {
                    std::vector<std::pair<int, int>> row{{f0, 0}};
                    bool ok = true;
                    for (int x = 1; x < a && ok; ++x) {
                        auto nx = grid_step(n, row.back().first, row.back().second, dx);
                        if (!nx) ok = false;
                        else row.push_back(*nx);
                    }
                    std::set<int> cells;
                    for (int y = 0; y < b && ok; ++y) {
                        for (auto& [f, rho] : row) {
                            cells.insert(f);
                            if (y + 1 < b) {
                                auto up = grid_step(n, f, rho, dy);
                                if (!up) { ok = false; break; }
                                std::tie(f, rho) = *up;
                            }
                        }
                    }
                    if (!ok || static_cast<int>(cells.size()) != a * b) break;
                    uint64_t mask = 0;
                    for (int f : cells) mask |= uint64_t{1} << n.face_tag[f];
                    if (seen.count(mask)) continue;
                    if (rectangle_dims(n, {cells.begin(), cells.end()})) seen.insert(mask);
                }
            }
        }
    }
    std::vector<std::vector<uint64_t>> bucket(S);
    for (uint64_t m : seen) bucket[std::countr_zero(m)].push_back(m);
    return bucket;
}

struct PartitionSearch {
    uint64_t full;
    const std::vector<std::vector<uint64_t>>& bucket;
    std::unordered_map<uint64_t, int> memo;

    int min_rects(uint64_t covered) {
        if (covered == full) return 0;
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        int q = std::countr_zero(~covered);
        int best = 1 << 28;
        for (uint64_t m : bucket[q])
            if (!(m & covered)) best = std::min(best, 1 + min_rects(covered | m));
        memo[covered] = best;
        return best;
    }

    void all_optimal(uint64_t covered, std::vector<uint64_t>& acc,
                     std::vector<std::vector<uint64_t>>& out, size_t cap) {
        if (out.size() >= cap) return;
        if (covered == full) {
            out.push_back(acc);
            return;
        }
        int q = std::countr_zero(~covered);
        int need = min_rects(covered);
        for (uint64_t m : bucket[q]) {
            if (m & covered) continue;
            if (1 + min_rects(covered | m) != need) continue;
            acc.push_back(m);
            all_optimal(covered | m, acc, out, cap);
            acc.pop_back();
        }
    }
};

std::vector<int> to_rect_of_square(int S, const std::vector<uint64_t>& parts) {
    std::vector<int> out(S, -1);
    for (size_t r = 0; r < parts.size(); ++r)
        for (int q = 0; q < S; ++q)
            if (parts[r] >> q & 1) out[q] = static_cast<int>(r);
    return out;
}

}  // namespace

OptStats brute_force_min_rectangulation(const DualNet& n, int cap) {
    int limit = oracle_cap(cap);
    if (n.n_squares > limit) throw ValidationError("instance too large for oracle");
    int S = n.n_squares;

    auto bucket = enumerate_rectangles(n);
    PartitionSearch search{(uint64_t{1} << S) - 1, bucket, {}};
    OptStats st;
    st.R_opt = search.min_rects(0);
    if (st.R_opt >= (1 << 28)) throw ValidationError("internal: no rectangle partition exists");

    std::vector<std::vector<uint64_t>> optima;
    std::vector<uint64_t> acc;
    search.all_optimal(0, acc, optima, 200000);
    st.n_optimal = static_cast<int>(optima.size());

    st.S_opt = st.S_opt_anychoice = 1 << 28;
    st.delta = 1 << 28;
    st.H_2 = 0;
    bool have_witness = false;
    for (const auto& parts : optima) {
        std::vector<int> ros = to_rect_of_square(S, parts);
        CutSet cs = delimiting_cutset(n, ros);
        Rectangulation r = extract_rectangulation(n, cs);
        if (r.R != st.R_opt)
            throw ValidationError("internal: oracle partition extracted a different rectangle count");
        if (r.S < st.S_opt || !have_witness) {
            st.S_opt = std::min(st.S_opt, r.S);
            st.witness = r;
            have_witness = true;
        }
        st.delta = std::min(st.delta, r.min_hole_segments());
        int h2 = 0;
        for (int k : r.hole_segments)
            if (k <= 2) ++h2;
        st.H_2 = std::max(st.H_2, h2);

        // minimum over the through-pair choices at ambiguous vertices
        std::vector<int> amb = ambiguous_vertices(n, ros);
        int best = r.S;
        if (!amb.empty() && amb.size() <= 10) {
            for (uint32_t pick = 0; pick < (uint32_t{1} << amb.size()); ++pick) {
                std::map<int, int> through;
                for (size_t i = 0; i < amb.size(); ++i) {
                    std::vector<int> rot = n.rotation(amb[i]);
                    through[amb[i]] = rot[(pick >> i & 1)] / 2;
                }
                best = std::min(best,
                                extract_rectangulation(n, delimiting_cutset(n, ros, &through)).S);
            }
        }
        st.S_opt_anychoice = std::min(st.S_opt_anychoice, best);
    }
    st.H = n.H;
    st.H_odd = n.H_odd;
    st.t = detect_toothed_holes(n);
    return st;
}

std::pair<std::vector<int>, int> brute_force_max_gain(const DualNet& n, const GainGraph& gb) {
    if (gb.n_b > 20) throw ValidationError("instance too large for oracle");
    int best_g = 0;
    uint32_t best_mask = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << gb.n_b); ++mask) {
        std::vector<Segment> segs;
        for (int i = 0; i < gb.n_b; ++i)
            if (mask >> i & 1) segs.push_back(gb.segments[i]);
        int g = gain_def(n, segs).g;
        if (g > best_g ||
            (g == best_g && std::popcount(mask) < std::popcount(best_mask)) ||
            (g == best_g && std::popcount(mask) == std::popcount(best_mask) && mask < best_mask)) {
            best_g = g;
            best_mask = mask;
        }
    }
    std::vector<int> sel;
    for (int i = 0; i < gb.n_b; ++i)
        if (best_mask >> i & 1) sel.push_back(i);
    return {sel, best_g};
}

std::string InequalityReport::to_tsv() const {
    std::ostringstream os;
    os << "check\tlhs\trhs\tapplicable\tpass\tslack\n";
    for (const Check& c : checks)
        os << c.name << '\t' << c.lhs << '\t' << c.rhs << '\t' << (c.applicable ? 1 : 0) << '\t'
           << (c.pass() ? 1 : 0) << '\t' << c.slack() << '\n';
    return os.str();
}

InequalityReport verify_inequalities(const DualNet& n, const Rectangulation& greedy,
                                     const OptStats& opt, const BipartiteResult* bip) {
    InequalityReport rep;
    auto add = [&](const std::string& name, long lhs, long rhs, bool applicable = true) {
        rep.checks.push_back({name, lhs, rhs, applicable});
    };
    long R = opt.R_opt, t = opt.t, H = opt.H;
    add("greedy_R_le_2Ropt_plus_H_minus_2", greedy.R, 2 * R + H - 2);
    add("H_odd_le_4Ropt", opt.H_odd, 4 * R);
    add("delta3_H_le_2Ropt", H, 2 * R, opt.delta >= 3);
    add("delta3_greedy_le_4Ropt_minus_2", greedy.R, 4 * R - 2, opt.delta >= 3);
    add("H2_le_4Ropt_plus_t", opt.H_2, 4 * R + t);
    add("holes_meet_two_segments", 2, opt.delta, R >= 2);
    add("H_le_6Ropt_plus_t_minus_4", H, 6 * R + t - 4);
    add("greedy_R_le_8Ropt_plus_t_minus_6", greedy.R, 8 * R + t - 6);
    add("bundles_le_8bc_plus_t", greedy.R, 8 * R + t);
    add("greedy_S_le_2Sopt", greedy.S, 2 * opt.S_opt);
    add("exp_le_2Sopt", n.exp_total, 2 * opt.S_opt);
    add("H_le_Sopt", H, opt.S_opt, R >= 2);
    if (bip) {
        add("bip_S_le_ceil_3half_Sopt", bip->rect.S, (3 * opt.S_opt + 1) / 2);
        add("bip_2R_le_9Ropt_plus_t", 2 * bip->rect.R, 9 * R + t);
    }
    return rep;
}

}  // namespace bundling
