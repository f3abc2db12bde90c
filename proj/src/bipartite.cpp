#include <algorithm>
#include <numeric>

#include "bundling/bipartite.hpp"

namespace bundling {

namespace {

Color other(Color c) { return c == Color::blue ? Color::red : Color::blue; }

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Components of the subgraph induced by the selected gain-graph edges;
/// returns (#vertices touched, #tree components).
std::pair<int, int> component_stats(const GainGraph& gb, const std::vector<int>& sel) {
    Dsu dsu(static_cast<int>(gb.vert_net.size()));
    std::vector<int> edge_cnt(gb.vert_net.size(), 0);
    std::vector<bool> touched(gb.vert_net.size(), false);
    for (int i : sel) {
        auto [a, b] = gb.edges[i];
        dsu.unite(a, b);
        touched[a] = touched[b] = true;
    }
    for (int i : sel) edge_cnt[dsu.find(gb.edges[i].first)]++;
    int nv = 0, tc = 0;
    std::vector<int> vert_cnt(gb.vert_net.size(), 0);
    for (size_t v = 0; v < touched.size(); ++v)
        if (touched[v]) {
            ++nv;
            vert_cnt[dsu.find(static_cast<int>(v))]++;
        }
    for (size_t v = 0; v < touched.size(); ++v)
        if (touched[v] && dsu.find(static_cast<int>(v)) == static_cast<int>(v) &&
            edge_cnt[v] == vert_cnt[v] - 1)
            ++tc;
    return {nv, tc};
}

}  // namespace

bool is_bipartite(const DualNet& n) {
    if (!n.is_colored()) return false;
    for (int f = 0; f < n.F(); ++f) {
        if (!n.is_square(f)) continue;
        const auto& walk = n.net.faces[f];
        for (size_t k = 0; k < walk.size(); ++k)
            if (n.edge_color(walk[k] / 2) ==
                n.edge_color(walk[(k + 1) % walk.size()] / 2))
                return false;
    }
    return true;
}

WeakStrongTable classify_weak_strong(const DualNet& n, Color c) {
    if (!is_bipartite(n)) throw ValidationError("net is not bipartite");
    WeakStrongTable t;
    t.cls.assign(n.V(), -1);
    for (int v = 0; v < n.V(); ++v) {
        if (n.exponent[v] <= 0) continue;
        bool weak = n.degree[v] % 2 == 1 && n.vkind[v] == VertexKind::border;
        if (weak)
            for (int h : n.rotation(v))
                if (n.border_edge[h / 2] && n.edge_color(h / 2) != other(c)) weak = false;
        t.cls[v] = weak ? 0 : 1;
    }
    return t;
}

std::vector<Segment> color_segments(const DualNet& n, Color c) {
    if (!is_bipartite(n)) throw ValidationError("net is not bipartite");
    CutSet scratch(n);
    std::vector<Segment> out;
    for (int e = 0; e < n.E(); ++e) {
        if (n.border_edge[e] || scratch.covered[e] || n.edge_color(e) != c) continue;
        // walk to a non-regular end of the straight path through e
        int h = 2 * e;
        int vend = n.net.origin[PlaneMap::twin(h)];
        for (int guard = 0; n.vkind[vend] == VertexKind::regular; ++guard) {
            if (guard > n.E()) throw ValidationError("monochromatic straight path never ends");
            // opposite continuation: two rotation steps from the back half
            int back = PlaneMap::twin(h);
            h = n.net.next_rot[n.net.next_rot[back]];
            vend = n.net.origin[PlaneMap::twin(h)];
        }
        Segment s = shoot_segment(n, vend, h / 2, scratch);
        scratch.add(s);
        out.push_back(std::move(s));
    }
    return out;
}

GainValue gain_def(const DualNet& n, const std::vector<Segment>& s) {
    std::vector<bool> covered(n.E(), false);
    for (const Segment& seg : s)
        for (int e : seg.edges) covered[e] = true;
    GainValue gv;
    gv.size = static_cast<int>(s.size());
    for (int v = 0; v < n.V(); ++v)
        gv.exp_drop += n.exponent[v] - relative_exponent(n, covered, v);
    gv.g = gv.exp_drop - gv.size;
    return gv;
}

GainGraph build_gain_graph(const DualNet& n, Color c) {
    GainGraph gb;
    gb.color = c;
    gb.net_vert.assign(n.V(), -1);
    WeakStrongTable t = classify_weak_strong(n, c);
    for (int v = 0; v < n.V(); ++v)
        if (n.exponent[v] > 0) {
            gb.net_vert[v] = static_cast<int>(gb.vert_net.size());
            gb.vert_net.push_back(v);
            gb.strong_v.push_back(t.cls[v] == 1);
        }
    auto end_vertex = [&](int v) {
        if (gb.net_vert[v] != -1) return gb.net_vert[v];
        int aux = static_cast<int>(gb.vert_net.size());  // private zero-exponent leaf
        gb.vert_net.push_back(v);
        gb.strong_v.push_back(false);
        return aux;
    };
    for (Segment& s : color_segments(n, c)) {
        gb.edges.emplace_back(end_vertex(s.vertices.front()), end_vertex(s.vertices.back()));
        gb.segments.push_back(std::move(s));
    }
    gb.n_b = static_cast<int>(gb.edges.size());
    for (size_t v = 0; v < gb.strong_v.size(); ++v)
        if (gb.strong_v[v]) gb.edges.emplace_back(static_cast<int>(v), static_cast<int>(v));
    return gb;
}

GainValue gain_formula(const GainGraph& gb, const std::vector<int>& s) {
    std::vector<bool> in_v(gb.vert_net.size(), false);
    for (int i : s) {
        in_v[gb.edges[i].first] = true;
        in_v[gb.edges[i].second] = true;
    }
    std::vector<int> hat(s);
    for (int i = gb.n_b; i < static_cast<int>(gb.edges.size()); ++i)
        if (in_v[gb.edges[i].first]) hat.push_back(i);
    auto [nv, tc] = component_stats(gb, hat);
    GainValue gv;
    gv.size = static_cast<int>(s.size());
    gv.g = static_cast<int>(hat.size()) - nv - tc;
    gv.exp_drop = gv.g + gv.size;
    return gv;
}

std::pair<int, int> bicircular_nullity(const GainGraph& gb, const std::vector<int>& s) {
    auto [nv, tc] = component_stats(gb, s);
    int rk = nv - tc;
    return {rk, static_cast<int>(s.size()) - rk};
}

std::vector<int> max_gain_set(const GainGraph& gb) {
    int nv = static_cast<int>(gb.vert_net.size());
    int ne = static_cast<int>(gb.edges.size());
    std::vector<bool> alive(ne, true);
    std::vector<int> deg(nv, 0);
    std::vector<std::vector<int>> inc(nv);
    for (int i = 0; i < ne; ++i) {
        auto [a, b] = gb.edges[i];
        inc[a].push_back(i);
        deg[a]++;
        deg[b]++;  // a loop contributes 2 at its vertex
        if (b != a) inc[b].push_back(i);
    }
    // prune leaf edges to a fixed point
    std::vector<int> stack;
    for (int v = 0; v < nv; ++v)
        if (deg[v] == 1) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (deg[v] != 1) continue;
        for (int i : inc[v])
            if (alive[i]) {
                alive[i] = false;
                auto [a, b] = gb.edges[i];
                deg[a]--;
                deg[b]--;
                int w = a == v ? b : a;
                if (deg[w] == 1) stack.push_back(w);
            }
    }
    // drop components isomorphic to cycles (every vertex of degree 2,
    // #edges equal to #vertices; a lone loop counts)
    Dsu dsu(nv);
    for (int i = 0; i < ne; ++i)
        if (alive[i]) dsu.unite(gb.edges[i].first, gb.edges[i].second);
    std::vector<int> ecnt(nv, 0), vcnt(nv, 0);
    std::vector<bool> deg_ok(nv, true);
    for (int i = 0; i < ne; ++i)
        if (alive[i]) ecnt[dsu.find(gb.edges[i].first)]++;
    for (int v = 0; v < nv; ++v)
        if (deg[v] > 0) {
            vcnt[dsu.find(v)]++;
            if (deg[v] != 2) deg_ok[dsu.find(v)] = false;
        }
    std::vector<int> out;
    for (int i = 0; i < gb.n_b; ++i) {
        if (!alive[i]) continue;
        int r = dsu.find(gb.edges[i].first);
        if (deg_ok[r] && ecnt[r] == vcnt[r]) continue;  // cycle component
        out.push_back(i);
    }
    return out;
}

BipartiteResult bipartite_pipeline(const DualNet& n) {
    if (!is_bipartite(n)) throw ValidationError("net is not bipartite");
    BipartiteResult best;
    bool first = true;
    for (Color c : {Color::blue, Color::red}) {
        GainGraph gb = build_gain_graph(n, c);
        std::vector<int> a = max_gain_set(gb);
        GainValue gv = gain_formula(gb, a);
        if (first || gv.g > best.gain.g) {
            best.color = c;
            best.gain = gv;
            best.seed_size = static_cast<int>(a.size());
            CutSet seed(n);
            for (int i : a) seed.add(gb.segments[i]);
            best.cutset = greedy_rectangulate(n, &seed);
            first = false;
        }
    }
    best.rect = extract_rectangulation(n, best.cutset);
    return best;
}

SplitGains split_gain_check(const DualNet& n, const CutSet& s) {
    SplitGains sg;
    std::vector<Segment> all, blue, red;
    for (const Segment& seg : s.segments) {
        all.push_back(seg);
        (n.edge_color(seg.edges.front()) == Color::blue ? blue : red).push_back(seg);
    }
    sg.blue = gain_def(n, blue);
    sg.red = gain_def(n, red);
    sg.whole = gain_def(n, all);
    sg.ok = sg.blue.g + sg.red.g >= sg.whole.g;
    return sg;
}

}  // namespace bundling
