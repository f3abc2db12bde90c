#include <array>
#include <cmath>
#include <set>
#include <sstream>

#include "bundling/render.hpp"

namespace bundling {

namespace {

using Pos = std::array<double, 2>;

std::string fmt(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

/// Map layout coordinates ([-1.1, 1.1] square) to pixels.
Pos px(Pos p) { return {400 + p[0] * 360, 400 - p[1] * 360}; }

std::string bundle_fill(int i) {
    return "hsl(" + std::to_string((i * 67) % 360) + ",70%,60%)";
}

const char* edge_stroke(Color c) {
    switch (c) {
        case Color::blue: return "#2b6cb0";
        case Color::red: return "#c53030";
        default: return "#444";
    }
}

}  // namespace

std::string render_svg(const DualNet& n, const Rectangulation* rect, const Bundling* bundles) {
    const GroundedArrangement& g = n.g;
    const PlaneMap& m = g.map;
    int V = m.num_vertices;

    // outer face: the interior of the first boundary curve (any face works
    // on the sphere; this one keeps the strings inside)
    int outer = g.n_curves > 0 ? g.hole_cell[0] : 0;
    std::vector<int> ring;
    std::set<int> on_ring;
    for (int h : m.faces[outer])
        if (on_ring.insert(m.origin[h]).second) ring.push_back(m.origin[h]);

    std::vector<Pos> pos(V, {0, 0});
    std::vector<bool> fixed(V, false);
    int k = static_cast<int>(ring.size());
    for (int i = 0; i < k; ++i) {
        double a = 2 * M_PI * i / k;
        pos[ring[i]] = {std::cos(a), std::sin(a)};
        fixed[ring[i]] = true;
    }
    std::vector<std::vector<int>> adj(V);
    for (int h = 0; h < m.num_halves(); ++h) adj[m.origin[h]].push_back(m.head(h));
    // barycentric relaxation; convergence is cosmetic, 500 sweeps suffice
    for (int it = 0; it < 500; ++it)
        for (int v = 0; v < V; ++v) {
            if (fixed[v] || adj[v].empty()) continue;
            Pos s{0, 0};
            for (int w : adj[v]) {
                s[0] += pos[w][0];
                s[1] += pos[w][1];
            }
            pos[v] = {s[0] / adj[v].size(), s[1] / adj[v].size()};
        }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg << "<defs><marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
           "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#1a7f37\"/></marker></defs>\n";
    svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // shaded bundles under everything else
    if (bundles)
        for (size_t i = 0; i < bundles->bundles.size(); ++i)
            for (int c : bundles->bundles[i]) {
                Pos p = px(pos[c]);  // crossings are vertices [0, n_crossings)
                svg << "<circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1])
                    << "\" r=\"14\" fill=\"" << bundle_fill(static_cast<int>(i))
                    << "\" opacity=\"0.45\"/>\n";
            }

    for (int a = 0; a < m.num_arcs(); ++a) {
        Pos p = px(pos[m.origin[2 * a]]), q = px(pos[m.head(2 * a)]);
        bool boundary = !g.is_string_arc(a);
        svg << "<line x1=\"" << fmt(p[0]) << "\" y1=\"" << fmt(p[1]) << "\" x2=\"" << fmt(q[0])
            << "\" y2=\"" << fmt(q[1]) << "\" stroke=\""
            << (boundary ? "#aaa" : edge_stroke(g.plan.arc_color(a))) << "\" stroke-width=\""
            << (boundary ? "1" : "2") << "\"" << (boundary ? " stroke-dasharray=\"4 3\"" : "")
            << "/>\n";
    }

    // cut-set segments, drawn through the cell centroids they separate
    if (rect) {
        std::vector<Pos> cell(n.V(), {0, 0});
        for (int v = 0; v < n.V(); ++v) {
            std::set<int> verts;
            for (int h : m.faces[n.cell_face[v]]) verts.insert(m.origin[h]);
            for (int w : verts) {
                cell[v][0] += pos[w][0] / verts.size();
                cell[v][1] += pos[w][1] / verts.size();
            }
        }
        for (const Segment& s : rect->cutset.segments) {
            svg << "<polyline fill=\"none\" stroke=\"#1a7f37\" stroke-width=\"2.5\" "
                   "marker-end=\"url(#tip)\" points=\"";
            for (size_t i = 0; i < s.vertices.size(); ++i) {
                Pos p = px(cell[s.vertices[i]]);
                svg << (i ? " " : "") << fmt(p[0]) << "," << fmt(p[1]);
            }
            svg << "\"/>\n";
        }
    }

    for (int v = 0; v < g.plan.n_crossings; ++v) {
        Pos p = px(pos[v]);
        svg << "<circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1])
            << "\" r=\"3\" fill=\"#000\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace bundling
