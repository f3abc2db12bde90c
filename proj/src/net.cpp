#include "bundling/net.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bundling {

std::vector<int> DualNet::rotation(int v) const {
    std::vector<int> rot;
    int start = first_half[v];
    if (start == -1) return rot;
    int h = start;
    do {
        rot.push_back(h);
        h = net.next_rot[h];
    } while (h != start);
    return rot;
}

DualNet build_net(const GroundedArrangement& g) {
    DualNet n;
    n.g = g;

    int n_gfaces = static_cast<int>(g.map.faces.size());
    n.face_cell.assign(n_gfaces, -1);
    std::vector<bool> is_hole_cell(n_gfaces, false);
    for (int f : g.hole_cell) is_hole_cell[f] = true;
    for (int f = 0; f < n_gfaces; ++f) {
        if (is_hole_cell[f]) continue;
        n.face_cell[f] = static_cast<int>(n.cell_face.size());
        n.cell_face.push_back(f);
    }

    int nh = 2 * g.n_string_arcs;  // net half-edges = primal string half-edges
    n.net.num_vertices = static_cast<int>(n.cell_face.size());
    n.net.origin.assign(nh, -1);
    n.net.next_rot.assign(nh, -1);
    for (int h = 0; h < nh; ++h) {
        n.net.origin[h] = n.face_cell[g.map.face_of[h]];
        if (n.net.origin[h] < 0) throw ValidationError("string arc borders a curve interior");
    }
    // Rotation at a cell: its string half-edges in boundary-walk order.
    for (const auto& walk : g.map.faces) {
        std::vector<int> sh;
        for (int h : walk)
            if (g.is_string_arc(h / 2)) sh.push_back(h);
        for (size_t i = 0; i < sh.size(); ++i) n.net.next_rot[sh[i]] = sh[(i + 1) % sh.size()];
    }
    n.net.trace_faces();

    // A net face orbit winds around one primal vertex, jumping over boundary
    // arcs: all-crossing orbits are squares, the rest are boundary-holes.
    int n_crossings = g.plan.n_crossings;
    n.square_face.assign(n_crossings, -1);
    for (size_t f = 0; f < n.net.faces.size(); ++f) {
        const auto& walk = n.net.faces[f];
        int crossing = -1, curve = -1;
        for (int h : walk) {
            int pv = g.map.origin[h];
            if (g.plan.is_endpoint(pv))
                curve = g.endpoint_curve[pv];
            else
                crossing = pv;
        }
        if (curve == -1) {
            if (static_cast<int>(walk.size()) != 4)
                throw ValidationError("square face without exactly 4 sides");
            n.face_kind.push_back(FaceKind::square);
            n.face_tag.push_back(crossing);
            if (n.square_face[crossing] != -1) throw ValidationError("crossing with two square faces");
            n.square_face[crossing] = static_cast<int>(f);
            ++n.n_squares;
        } else {
            n.face_kind.push_back(FaceKind::boundary_hole);
            n.face_tag.push_back(curve);
            ++n.n_boundary_holes;
        }
    }
    if (n.n_squares != n_crossings) throw ValidationError("crossing without a square face");

    n.border_edge.assign(n.E(), false);
    for (int e = 0; e < n.E(); ++e) n.border_edge[e] = g.is_end_arc(e);

    n.degree.assign(n.V(), 0);
    n.first_half.assign(n.V(), -1);
    for (int h = 0; h < nh; ++h) {
        int v = n.net.origin[h];
        if (n.first_half[v] == -1) n.first_half[v] = h;
        ++n.degree[v];
    }

    // Border vertices: cells whose boundary walk uses a boundary arc.
    std::vector<bool> border_v(n.V(), false);
    for (int v = 0; v < n.V(); ++v)
        for (int h : g.map.faces[n.cell_face[v]])
            if (!g.is_string_arc(h / 2)) {
                border_v[v] = true;
                break;
            }

    n.vkind.resize(n.V());
    for (int v = 0; v < n.V(); ++v) {
        int d = n.degree[v];
        if (border_v[v]) {
            n.vkind[v] = VertexKind::border;
        } else if (d == 4) {
            n.vkind[v] = VertexKind::regular;
        } else {
            n.vkind[v] = VertexKind::vertex_hole;
            ++n.n_vertex_holes;
            if (d % 2 == 1) ++n.H_odd;
        }
    }
    n.H = n.n_vertex_holes + n.n_boundary_holes;

    // Exponent by its definition: the minimum number of edges saturating v.
    // This equals floor(d/2)-1 on border vertices touching the boundary
    // along one stretch and ceil(d/2) on vertex-holes; computing it from the
    // definition also covers multi-stretch border vertices.
    n.exponent.assign(n.V(), 0);
    std::vector<bool> none(n.E(), false);
    for (int v = 0; v < n.V(); ++v) {
        n.exponent[v] = relative_exponent(n, none, v);
        n.exp_total += n.exponent[v];
    }

    if (n.V() - n.E() + n.F() != 2) throw ValidationError("net fails the Euler identity");
    return n;
}

namespace {

// Square-corner count of each angle that the selected edges (covered or
// border) induce at v. A square meeting v in two sectors occupies two
// corners. Hole sectors split angles like selected edges do: no rectangle
// corner can span them. Empty result: no separator at v (interior vertex,
// all-square full circle).
std::vector<int> angle_squares(const DualNet& n, const std::vector<bool>& covered, int v) {
    std::vector<int> rot = n.rotation(v);
    int d = static_cast<int>(rot.size());
    // sector i lies between rot[i] and rot[i+1]; a run of square corners
    // breaks at selected edges and at hole sectors
    std::vector<int> counts;
    int run = 0;
    auto flush = [&]() {
        counts.push_back(run);
        run = 0;
    };
    int first_sep = -1;
    for (int i = 0; i < d; ++i) {
        int e = rot[i] / 2;
        if (n.border_edge[e] || covered[e]) {
            first_sep = i;
            break;
        }
        if (!n.is_square(n.sector_face(rot[i]))) {
            first_sep = i;
            break;
        }
    }
    if (first_sep == -1) return counts;  // full all-square circle
    for (int s = 0; s < d; ++s) {
        int i = (first_sep + s) % d;
        int e = rot[i] / 2;
        bool edge_sep = n.border_edge[e] || covered[e];
        if (edge_sep && s > 0) flush();
        if (n.is_square(n.sector_face(rot[i])))
            ++run;
        else if (run > 0)
            flush();
    }
    flush();
    return counts;
}

}  // namespace

bool saturates(const DualNet& n, const std::vector<bool>& covered, int v) {
    std::vector<int> counts = angle_squares(n, covered, v);
    if (counts.empty()) return n.vkind[v] == VertexKind::regular;
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 2; });
}

int relative_exponent(const DualNet& n, const std::vector<bool>& covered, int v) {
    std::vector<int> counts = angle_squares(n, covered, v);
    if (counts.empty())
        return n.vkind[v] == VertexKind::regular ? 0 : (n.degree[v] + 1) / 2;
    int total = 0;
    for (int c : counts) total += std::max((c + 1) / 2 - 1, 0);
    return total;
}

namespace {

// Degree profile of the vertices on a boundary-hole: counts of degree 3, 5,
// 7, and anything else.
struct HoleProfile {
    int d3 = 0, d5 = 0, d7 = 0, other = 0;
};

HoleProfile hole_profile(const DualNet& n, int face) {
    std::set<int> verts;
    for (int h : n.net.faces[face]) verts.insert(n.net.origin[h]);
    HoleProfile p;
    for (int v : verts) {
        switch (n.degree[v]) {
            case 3: ++p.d3; break;
            case 5: ++p.d5; break;
            case 7: ++p.d7; break;
            default: ++p.other; break;
        }
    }
    return p;
}

}  // namespace

int detect_toothed_holes(const DualNet& n) {
    int t = 0;
    for (int f = 0; f < n.F(); ++f) {
        if (n.is_square(f)) continue;
        HoleProfile p = hole_profile(n, f);
        if (p.other != 0) continue;
        if ((p.d7 == 1 && p.d5 == 0) || (p.d7 == 0 && p.d5 == 2)) ++t;
    }
    return t;
}

PatternReport detect_forbidden_patterns(const DualNet& n) {
    PatternReport rep;
    for (int v = 0; v < n.V(); ++v)
        if (n.vkind[v] == VertexKind::vertex_hole && n.degree[v] <= 2)
            rep.findings.push_back("degree-" + std::to_string(n.degree[v]) +
                                   " vertex-hole at vertex " + std::to_string(v));
    for (int f = 0; f < n.F(); ++f) {
        if (n.is_square(f)) continue;
        HoleProfile p = hole_profile(n, f);
        if (p.other != 0 || p.d7 != 0) continue;
        if (p.d5 == 0 && p.d3 > 0)
            rep.findings.push_back("boundary-hole " + std::to_string(f) +
                                   " with all vertices of degree 3");
        else if (p.d5 == 1)
            rep.findings.push_back("boundary-hole " + std::to_string(f) +
                                   " with one degree-5 vertex and the rest of degree 3");
    }

    // Square-rings and square-loops: follow chains of squares glued through
    // opposite sides. The walk state (square, exit half) is reversible, so a
    // cyclic trajectory returns to its initial state.
    std::vector<bool> seen(n.net.num_halves(), false);
    auto opposite_in_square = [&](int face, int h) {
        const auto& w = n.net.faces[face];
        for (int i = 0; i < 4; ++i)
            if (w[i] == h) return w[(i + 2) % 4];
        throw ValidationError("half-edge not on its square");
    };
    for (int f = 0; f < n.F(); ++f) {
        if (!n.is_square(f)) continue;
        for (int h0 : n.net.faces[f]) {
            if (seen[h0]) continue;
            std::vector<int> trail{h0};
            int exit = h0;
            bool cycle = false, ring = false;
            for (int steps = 0; steps <= n.n_squares; ++steps) {
                int entry = PlaneMap::twin(exit);  // half on the neighbor's side
                int nf = n.net.face_of[entry];
                if (!n.is_square(nf)) break;
                if (nf == f) {
                    cycle = true;
                    // Straight continuation would exit through the side
                    // opposite the entry; a square-ring closes straight, a
                    // square-loop closes through a consecutive side.
                    ring = (opposite_in_square(f, entry) == h0);
                    break;
                }
                exit = opposite_in_square(nf, entry);
                trail.push_back(exit);
            }
            if (cycle) {
                for (int h : trail) {
                    seen[h] = true;
                    seen[PlaneMap::twin(h)] = true;
                    for (int x : n.net.faces[n.net.face_of[h]]) seen[x] = true;
                }
                rep.findings.push_back(std::string(ring ? "square-ring" : "square-loop") +
                                       " through " + std::to_string(trail.size()) + " squares");
            }
        }
    }
    return rep;
}

std::string dump_net(const DualNet& n) {
    std::ostringstream out;
    out << "net V=" << n.V() << " E=" << n.E() << " F=" << n.F() << " squares=" << n.n_squares
        << " boundary-holes=" << n.n_boundary_holes << " vertex-holes=" << n.n_vertex_holes
        << " H=" << n.H << " H_odd=" << n.H_odd << " exp=" << n.exp_total << "\n";
    for (int v = 0; v < n.V(); ++v) {
        out << "v " << v << " ";
        switch (n.vkind[v]) {
            case VertexKind::regular: out << "regular"; break;
            case VertexKind::border: out << "border"; break;
            case VertexKind::vertex_hole: out << "vertex-hole"; break;
        }
        out << " deg=" << n.degree[v] << " exp=" << n.exponent[v] << " edges=";
        std::vector<int> rot = n.rotation(v);
        for (size_t i = 0; i < rot.size(); ++i) out << (i ? "," : "") << rot[i] / 2;
        out << "\n";
    }
    for (int e = 0; e < n.E(); ++e) {
        out << "e " << e << " " << n.net.origin[2 * e] << "-" << n.net.origin[2 * e + 1] << " "
            << color_name(n.edge_color(e));
        if (n.border_edge[e]) out << " border";
        out << "\n";
    }
    for (int f = 0; f < n.F(); ++f) {
        if (n.is_square(f))
            out << "f " << f << " square crossing=" << n.g.plan.arr.crossings[n.face_tag[f]].id;
        else
            out << "f " << f << " hole curve=" << n.face_tag[f];
        out << " vertices=";
        const auto& walk = n.net.faces[f];
        for (size_t i = 0; i < walk.size(); ++i) out << (i ? "," : "") << n.net.origin[walk[i]];
        out << "\n";
    }
    return out.str();
}

}  // namespace bundling
