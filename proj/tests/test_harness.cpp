#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bundling/harness.hpp"
#include "bundling/render.hpp"

using namespace bundling;

TEST_CASE("a small default suite runs clean") {
    HarnessReport rep = run_harness(default_suite(1, 60));
    CHECK(rep.failures == 0);
    CHECK(rep.ok());
    // negative instances are present and expected to be rejected
    int negatives = 0;
    for (const InstanceOutcome& o : rep.outcomes)
        if (o.family == "ring" || o.family == "loop") ++negatives;
    CHECK(negatives == 2);
}

TEST_CASE("serial and parallel harness runs agree") {
    std::vector<HarnessItem> items = default_suite(7, 40);
    HarnessReport serial = run_harness(items, -1, false);
    HarnessReport parallel = run_harness(items, -1, true);
    REQUIRE(serial.outcomes.size() == parallel.outcomes.size());
    for (size_t i = 0; i < items.size(); ++i) {
        CHECK(serial.outcomes[i].ok == parallel.outcomes[i].ok);
        CHECK(serial.outcomes[i].tsv() == parallel.outcomes[i].tsv());
    }
    CHECK(serial.worst_R == parallel.worst_R);
}

TEST_CASE("per-instance failures are reported, not thrown") {
    HarnessItem bad{"circular", 0, "{not json"};
    InstanceOutcome out = process_instance(bad, -1);
    CHECK(!out.ok);
    CHECK(!out.note.empty());
}

TEST_CASE("rendering emits the expected motifs") {
    std::vector<HarnessItem> items = default_suite(1, 0);
    for (const HarnessItem& item : items) {
        if (item.family != "toothed" || item.seed != 5) continue;
        DualNet n = build_net(ground(build_planarization(parse_instance(item.json))));
        Rectangulation r = extract_rectangulation(n, greedy_rectangulate(n));
        Bundling b = to_bundling(n, r);
        std::string svg = render_svg(n, &r, &b);
        CHECK(svg.find("<svg") == 0);
        // deterministic output
        CHECK(svg == render_svg(n, &r, &b));
        // one shaded circle per crossing, one polyline per segment
        size_t shaded = 0, pos = 0;
        while ((pos = svg.find("opacity=\"0.45\"", pos)) != std::string::npos) {
            ++shaded;
            ++pos;
        }
        CHECK(static_cast<int>(shaded) == n.n_squares);
        size_t arrows = 0;
        pos = 0;
        while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
            ++arrows;
            ++pos;
        }
        CHECK(static_cast<int>(arrows) == r.S);
    }
}
