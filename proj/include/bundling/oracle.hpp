#ifndef BUNDLING_ORACLE_HPP
#define BUNDLING_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bundling/bipartite.hpp"
#include "bundling/rectangulation.hpp"

namespace bundling {

/// Resolution order for the square-count cap on the exact solver: explicit
/// flag value (> 0), then the BUNDLE_ORACLE_CAP environment variable, then
/// the default of 20.
int oracle_cap(int flag_value = -1);

/// Ground truth for a small net, from exhaustive rectangle-partition search.
struct OptStats {
    int R_opt = 0;
    int S_opt = 0;            // canonical delimiting cut-sets, min over optima
    int S_opt_anychoice = 0;  // also minimized over through-pair choices
    int delta = 0;            // min over optima of min hole-segment incidence
    int H = 0, H_odd = 0;
    int H_2 = 0;  // max over optima of #holes incident with <= 2 segments
    int t = 0;
    int n_optimal = 0;         // enumerated optimal partitions
    Rectangulation witness;    // an optimum attaining S_opt
};

/// Exhaustive branch-and-bound over rectangle partitions of the squares,
/// memoized on the covered-square set. Throws "instance too large for
/// oracle" above the cap.
OptStats brute_force_min_rectangulation(const DualNet& n, int cap = -1);

/// Maximizes gain_def over all subsets of B (|B| <= 20), ties broken by
/// minimal cardinality, then lexicographically.
std::pair<std::vector<int>, int> brute_force_max_gain(const DualNet& n, const GainGraph& gb);

struct Check {
    std::string name;
    long lhs = 0, rhs = 0;  // scaled by 2 where halves appear
    bool applicable = true;
    bool pass() const { return !applicable || lhs <= rhs; }
    long slack() const { return rhs - lhs; }
};

struct InequalityReport {
    std::vector<Check> checks;
    bool ok() const {
        for (const Check& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    std::string to_tsv() const;
};

/// Every bound from the approximation analysis, evaluated against the
/// oracle; the bipartite result is optional (uncolored instances).
InequalityReport verify_inequalities(const DualNet& n, const Rectangulation& greedy,
                                     const OptStats& opt,
                                     const BipartiteResult* bip = nullptr);

}  // namespace bundling

#endif
