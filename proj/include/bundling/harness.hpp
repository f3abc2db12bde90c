#ifndef BUNDLING_HARNESS_HPP
#define BUNDLING_HARNESS_HPP

#include <string>
#include <vector>

#include "bundling/oracle.hpp"

namespace bundling {

/// One harness work item: a generated instance plus what to expect from it.
struct HarnessItem {
    std::string family;  // circular / bilaminar / grid / toothed / c4xc4 / ring / loop
    unsigned seed = 0;
    std::string json;
    bool expect_reject = false;  // negative instances must fail validation
};

struct InstanceOutcome {
    std::string family;
    unsigned seed = 0;
    bool ok = false;
    std::string note;  // first failed check or error text
    int squares = 0, H = 0, t = 0;
    int S_greed = -1, R_greed = -1;
    int S_bip = -1, R_bip = -1;
    int R_opt = -1, S_opt = -1;
    std::string tsv() const;
};

struct HarnessReport {
    std::vector<InstanceOutcome> outcomes;
    int failures = 0;
    // worst observed ratios, as (numerator, denominator) pairs
    std::pair<int, int> worst_R{0, 1};      // R_greed : R_opt
    std::pair<int, int> worst_S{0, 1};      // S_greed : S_opt
    std::pair<int, int> worst_bip_S{0, 1};  // S_bip : S_opt
    bool ok() const { return failures == 0; }
    std::string summary() const;
    static std::string tsv_header();
};

/// The default suite: 1000 random circular instances (n <= 8), grids up to
/// 6x6, toothed k = 1..10, bilaminar seeds, the c4xc4 core, and the negative
/// ring/loop pair.
std::vector<HarnessItem> default_suite(unsigned seed, int n_circular = 1000);

/// Per instance: parse, validate, build the net, greedy, bipartite when
/// colored, oracle when small, and every inequality check. Failures are
/// collected, never thrown. With parallel=true instances are processed in an
/// OpenMP loop; the serial path is the reference implementation.
HarnessReport run_harness(const std::vector<HarnessItem>& items, int cap = -1,
                          bool parallel = true);

/// What run_harness does to one item; exposed for the serial reference and
/// the benchmark.
InstanceOutcome process_instance(const HarnessItem& item, int cap);

}  // namespace bundling

#endif
