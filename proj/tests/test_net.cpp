#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bundling/net.hpp"

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

TEST_CASE("net of a single crossing is a 4-cycle") {
    DualNet n = net_of(kPlus);
    CHECK(n.V() == 4);
    CHECK(n.E() == 4);
    CHECK(n.F() == 2);
    CHECK(n.n_squares == 1);
    CHECK(n.n_boundary_holes == 1);
    CHECK(n.H == 1);
    CHECK(n.H_odd == 0);
    for (int v = 0; v < n.V(); ++v) {
        CHECK(n.vkind[v] == VertexKind::border);
        CHECK(n.degree[v] == 2);
        CHECK(n.exponent[v] == 0);
    }
    CHECK(n.exp_total == 0);
    for (int e = 0; e < n.E(); ++e) CHECK(n.border_edge[e]);
    CHECK(detect_toothed_holes(n) == 0);
    CHECK(detect_forbidden_patterns(n).ok());
}

TEST_CASE("net of the 4x4 grid is the 5x5 grid graph") {
    DualNet n = net_of(grid_instance(4, 4));
    CHECK(n.V() == 25);
    CHECK(n.E() == 40);
    CHECK(n.F() == 17);
    CHECK(n.n_squares == 16);
    CHECK(n.n_boundary_holes == 1);
    CHECK(n.H == 1);

    int regular = 0, border = 0;
    for (int v = 0; v < n.V(); ++v) {
        if (n.vkind[v] == VertexKind::regular) ++regular;
        if (n.vkind[v] == VertexKind::border) ++border;
    }
    CHECK(regular == 9);
    CHECK(border == 16);
    CHECK(n.exp_total == 0);

    int border_edges = 0;
    for (int e = 0; e < n.E(); ++e) border_edges += n.border_edge[e];
    CHECK(border_edges == 16);

    std::vector<bool> none(n.E(), false);
    for (int v = 0; v < n.V(); ++v) {
        CHECK(saturates(n, none, v));
        CHECK(relative_exponent(n, none, v) == n.exponent[v]);
    }
    CHECK(detect_toothed_holes(n) == 0);
    CHECK(detect_forbidden_patterns(n).ok());
}

TEST_CASE("net dump is stable and complete") {
    std::string d = dump_net(net_of(kPlus));
    CHECK(d.find("net V=4 E=4 F=2 squares=1") != std::string::npos);
    CHECK(d.find("v 0 border deg=2") != std::string::npos);
    CHECK(d.find("square crossing=0") != std::string::npos);
    CHECK(dump_net(net_of(kPlus)) == d);
}

TEST_CASE("two closed curves crossing four times are flagged") {
    DualNet n = net_of(
        R"({"strings":[{"id":0,"crossings":[0,1,2,3],"closed":true},
                       {"id":1,"crossings":[0,1,2,3],"closed":true}],
            "crossings":[{"id":0,"strings":[0,1],"sign":1},
                         {"id":1,"strings":[0,1],"sign":-1},
                         {"id":2,"strings":[0,1],"sign":1},
                         {"id":3,"strings":[0,1],"sign":-1}]})");
    CHECK(n.n_squares == 4);
    CHECK(n.n_boundary_holes == 0);
    auto rep = detect_forbidden_patterns(n);
    CHECK(!rep.ok());
    bool chain = false, low_deg = false;
    for (const auto& f : rep.findings) {
        if (f.find("square-") != std::string::npos) chain = true;
        if (f.find("vertex-hole") != std::string::npos) low_deg = true;
    }
    CHECK(chain);
    CHECK(low_deg);
}

TEST_CASE("self-crossing closed string is flagged") {
    DualNet n = net_of(
        R"({"strings":[{"id":0,"crossings":[0,1,2,0,1,2],"closed":true}],
            "crossings":[{"id":0,"strings":[0,0],"sign":-1},
                         {"id":1,"strings":[0,0],"sign":1},
                         {"id":2,"strings":[0,0],"sign":-1}]})");
    CHECK(n.n_squares == 3);
    auto rep = detect_forbidden_patterns(n);
    CHECK(!rep.ok());
    bool loop = false;
    for (const auto& f : rep.findings)
        if (f.find("square-loop") != std::string::npos) loop = true;
    CHECK(loop);
}
