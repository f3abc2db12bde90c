#include "bundling/planarization.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace bundling {

void PlaneMap::trace_faces() {
    faces.clear();
    face_of.assign(num_halves(), -1);
    for (int h0 = 0; h0 < num_halves(); ++h0) {
        if (face_of[h0] != -1) continue;
        std::vector<int> walk;
        int h = h0;
        do {
            face_of[h] = static_cast<int>(faces.size());
            walk.push_back(h);
            h = next_rot[twin(h)];
        } while (h != h0);
        faces.push_back(std::move(walk));
    }
}

std::vector<int> PlaneMap::rotation_at(int v) const {
    int start = -1;
    for (int h = 0; h < num_halves(); ++h)
        if (origin[h] == v) {
            start = h;
            break;
        }
    std::vector<int> rot;
    if (start == -1) return rot;
    int h = start;
    do {
        rot.push_back(h);
        h = next_rot[h];
    } while (h != start);
    return rot;
}

std::vector<int> PlaneMap::degree_table() const {
    std::vector<int> deg(num_vertices, 0);
    for (int h = 0; h < num_halves(); ++h) ++deg[origin[h]];
    return deg;
}

namespace {

int count_components(const PlaneMap& m) {
    std::vector<int> comp(m.num_vertices, -1);
    int n = 0;
    for (int v0 = 0; v0 < m.num_vertices; ++v0) {
        if (comp[v0] != -1) continue;
        std::vector<int> stack{v0};
        comp[v0] = n;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h = 0; h < m.num_halves(); ++h) {
                if (m.origin[h] != v) continue;
                int w = m.head(h);
                if (comp[w] == -1) {
                    comp[w] = n;
                    stack.push_back(w);
                }
            }
        }
        ++n;
    }
    return n;
}

}  // namespace

Planarization build_planarization(const Arrangement& arr) {
    Planarization p;
    p.arr = arr;
    p.n_crossings = static_cast<int>(arr.crossings.size());

    struct Slot {
        int in_back = -1;  // half-edge at the crossing pointing back along the string
        int out = -1;      // half-edge at the crossing pointing onward
    };
    // Per crossing, two slots: slot 0 for the first listed string, slot 1 for
    // the second (for self-intersections: first and second occurrence).
    std::vector<std::array<Slot, 2>> slots(p.n_crossings);

    int next_vertex = p.n_crossings;
    std::vector<int> origin;
    std::vector<int> arc_string;

    auto new_arc = [&](int tail) {
        origin.push_back(tail);  // half 2a
        origin.push_back(-1);    // half 2a+1, head set later
        return static_cast<int>(origin.size()) / 2 - 1;
    };

    std::map<std::pair<int, int>, int> occurrence;  // (string idx, crossing idx) -> count

    for (size_t si = 0; si < arr.strings.size(); ++si) {
        const StringCurve& s = arr.strings[si];
        std::vector<int> stops;  // vertex ids along the string
        int end0 = -1, end1 = -1;
        if (!s.closed) {
            end0 = next_vertex++;
            stops.push_back(end0);
        }
        std::vector<int> cidx;
        for (int cid : s.crossings) {
            int ci = arr.crossing_index(cid);
            stops.push_back(ci);
            cidx.push_back(ci);
        }
        if (!s.closed) {
            end1 = next_vertex++;
            stops.push_back(end1);
            p.endpoint_owner.emplace_back(static_cast<int>(si), 0);
            p.endpoint_owner.emplace_back(static_cast<int>(si), 1);
        }

        int n_arcs_here = s.closed ? static_cast<int>(stops.size()) : static_cast<int>(stops.size()) - 1;
        std::vector<int> arcs;
        for (int i = 0; i < n_arcs_here; ++i) {
            int tail = stops[i];
            int head = stops[(i + 1) % stops.size()];
            int a = new_arc(tail);
            origin[2 * a + 1] = head;
            arc_string.push_back(static_cast<int>(si));
            arcs.push_back(a);
        }

        // Fill crossing slots: occurrence j of the string at crossing ci.
        for (size_t j = 0; j < cidx.size(); ++j) {
            int ci = cidx[j];
            const Crossing& c = arr.crossings[ci];
            int role;
            if (c.string_a == c.string_b) {
                role = occurrence[{static_cast<int>(si), ci}]++;
            } else {
                role = (arr.string_index(c.string_a) == static_cast<int>(si)) ? 0 : 1;
            }
            int arc_in, arc_out;
            if (s.closed) {
                arc_in = arcs[(j + arcs.size() - 1) % arcs.size()];
                arc_out = arcs[j];
            } else {
                arc_in = arcs[j];
                arc_out = arcs[j + 1];
            }
            slots[ci][role].in_back = 2 * arc_in + 1;  // origin = crossing
            slots[ci][role].out = 2 * arc_out;
        }
    }

    p.n_endpoints = next_vertex - p.n_crossings;
    p.map.num_vertices = next_vertex;
    p.map.origin = std::move(origin);
    p.arc_string = std::move(arc_string);
    p.map.next_rot.assign(p.map.num_halves(), -1);

    // Rotations at crossings. Sign +1: counterclockwise (a_in, b_in, a_out, b_out).
    for (int ci = 0; ci < p.n_crossings; ++ci) {
        const Slot& a = slots[ci][0];
        const Slot& b = slots[ci][1];
        if (a.in_back < 0 || b.in_back < 0)
            throw ValidationError("crossing " + std::to_string(arr.crossings[ci].id) +
                                  ": incomplete incidence");
        std::array<int, 4> order;
        if (arr.crossings[ci].sign == +1)
            order = {a.in_back, b.in_back, a.out, b.out};
        else
            order = {a.in_back, b.out, a.out, b.in_back};
        for (int i = 0; i < 4; ++i) p.map.next_rot[order[i]] = order[(i + 1) % 4];
    }
    // Rotations at endpoints (degree 1).
    for (int h = 0; h < p.map.num_halves(); ++h)
        if (p.map.next_rot[h] == -1) p.map.next_rot[h] = h;

    p.map.trace_faces();
    int comps = count_components(p.map);
    if (p.V() - p.E() + p.F() != 2 * comps)
        throw ValidationError("not a sphere drawing / inconsistent signs");
    return p;
}

ValidationReport validate_pseudosegments(const Planarization& p) {
    ValidationReport rep;
    const Arrangement& arr = p.arr;
    for (const auto& s : arr.strings) {
        if (s.closed)
            rep.violations.push_back({'c', "closed string " + std::to_string(s.id)});
        std::set<int> seen;
        for (int cid : s.crossings)
            if (!seen.insert(cid).second)
                rep.violations.push_back({'a', "string " + std::to_string(s.id) +
                                                   " crosses itself at crossing " + std::to_string(cid)});
    }
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& c : arr.crossings) {
        if (c.string_a == c.string_b) continue;  // already reported as (a)
        auto key = std::minmax(c.string_a, c.string_b);
        ++pair_count[{key.first, key.second}];
    }
    for (const auto& [key, n] : pair_count)
        if (n >= 2)
            rep.violations.push_back({'b', "strings " + std::to_string(key.first) + " and " +
                                               std::to_string(key.second) + " cross " + std::to_string(n) +
                                               " times (lens)"});
    return rep;
}

bool GroundedArrangement::is_end_arc(int arc) const {
    if (!is_string_arc(arc)) return false;
    return plan.is_endpoint(map.origin[2 * arc]) || plan.is_endpoint(map.origin[2 * arc + 1]);
}

GroundedArrangement ground(const Planarization& p) {
    if (count_components(p.map) > 1) throw ValidationError("split components first");

    GroundedArrangement g;
    g.plan = p;
    g.map = p.map;
    g.n_string_arcs = p.map.num_arcs();
    g.arc_curve.assign(g.n_string_arcs, -1);
    g.endpoint_curve.assign(p.map.num_vertices, -1);

    // Collect endpoints per face in boundary-walk order.
    for (const auto& walk : p.map.faces) {
        std::vector<int> pts;
        for (int h : walk)
            if (p.is_endpoint(p.map.origin[h])) pts.push_back(p.map.origin[h]);
        if (pts.empty()) continue;
        int curve = g.n_curves++;
        g.curve_endpoints.push_back(pts);
        for (int v : pts) g.endpoint_curve[v] = curve;

        int m = static_cast<int>(pts.size());
        std::vector<int> arcs(m);
        for (int i = 0; i < m; ++i) {
            // Arc from pts[i] to pts[(i+1) % m].
            g.map.origin.push_back(pts[i]);
            g.map.origin.push_back(pts[(i + 1) % m]);
            g.map.next_rot.push_back(-1);
            g.map.next_rot.push_back(-1);
            g.arc_curve.push_back(curve);
            arcs[i] = g.map.num_arcs() - 1;
        }
        // Rotation at each endpoint: (string end, from previous, toward next), CCW.
        for (int i = 0; i < m; ++i) {
            int v = pts[i];
            int e = -1;  // the unique string half-edge at v
            for (int h = 0; h < 2 * g.n_string_arcs; ++h)
                if (g.map.origin[h] == v) {
                    e = h;
                    break;
                }
            assert(e != -1);
            int to_next = 2 * arcs[i];
            int to_prev = 2 * arcs[(i + m - 1) % m] + 1;
            g.map.next_rot[e] = to_prev;
            g.map.next_rot[to_prev] = to_next;
            g.map.next_rot[to_next] = e;
        }
    }

    g.map.trace_faces();
    int V = g.map.num_vertices, E = g.map.num_arcs(), F = static_cast<int>(g.map.faces.size());
    if (V - E + F != 2) throw ValidationError("grounding broke the sphere embedding");

    // Locate the interior cell of each curve: the face bounded solely by the
    // curve's boundary arcs.
    g.hole_cell.assign(g.n_curves, -1);
    for (size_t f = 0; f < g.map.faces.size(); ++f) {
        const auto& walk = g.map.faces[f];
        int curve = -1;
        bool pure = true;
        for (int h : walk) {
            int a = h / 2;
            if (g.is_string_arc(a)) {
                pure = false;
                break;
            }
            if (curve == -1)
                curve = g.arc_curve[a];
            else if (curve != g.arc_curve[a])
                pure = false;
        }
        if (pure && curve != -1) {
            if (g.hole_cell[curve] != -1)
                throw ValidationError("grounding produced two interior cells for one curve");
            g.hole_cell[curve] = static_cast<int>(f);
        }
    }
    for (int c = 0; c < g.n_curves; ++c)
        if (g.hole_cell[c] == -1) throw ValidationError("grounding produced no interior cell for a curve");
    return g;
}

}  // namespace bundling
