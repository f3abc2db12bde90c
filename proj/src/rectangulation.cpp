#include "bundling/rectangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace bundling {

void CutSet::add(const Segment& s) {
    int id = size();
    segments.push_back(s);
    for (int e : s.edges) {
        covered[e] = true;
        seg_of_edge[e] = id;
    }
    for (size_t i = 1; i + 1 < s.vertices.size(); ++i) interior_vertex[s.vertices[i]] = true;
}

bool is_saturating(const DualNet& n, const CutSet& s) {
    for (int v = 0; v < n.V(); ++v)
        if (!saturates(n, s.covered, v)) return false;
    return true;
}

namespace {

SegmentEnd end_at(const DualNet& n, int v) {
    SegmentEnd e;
    e.vertex = v;
    switch (n.vkind[v]) {
        case VertexKind::border: e.kind = SegmentEnd::at_border; break;
        case VertexKind::vertex_hole: e.kind = SegmentEnd::at_hole; break;
        case VertexKind::regular: e.kind = SegmentEnd::at_segment; break;
    }
    return e;
}

// Rotation-opposite outgoing half at the regular head of h; -1 when the head
// is not a degree-4 vertex.
int opposite_out(const DualNet& n, int h) {
    int back = PlaneMap::twin(h);
    int u = n.net.origin[back];
    if (n.degree[u] != 4) return -1;
    return n.net.next_rot[n.net.next_rot[back]];
}

}  // namespace

Segment shoot_segment(const DualNet& n, int v, int e, const CutSet& s) {
    if (s.covered[e]) throw ValidationError("edge already covered");
    int h = (n.net.origin[2 * e] == v) ? 2 * e : 2 * e + 1;
    if (n.net.origin[h] != v) throw ValidationError("edge not incident with the vertex");

    Segment seg;
    seg.front = end_at(n, v);
    seg.vertices.push_back(v);
    for (;;) {
        seg.edges.push_back(h / 2);
        int u = n.net.origin[PlaneMap::twin(h)];
        seg.vertices.push_back(u);
        if (n.vkind[u] != VertexKind::regular) {
            seg.back = end_at(n, u);
            break;
        }
        if (s.interior_vertex[u]) {
            seg.back = {SegmentEnd::at_segment, u};
            break;
        }
        int h2 = opposite_out(n, h);
        if (h2 == -1 || s.covered[h2 / 2]) {
            seg.back = {SegmentEnd::at_segment, u};
            break;
        }
        h = h2;
    }
    return seg;
}

namespace {

// One angle at a vertex: the rotation positions of its sectors and, among
// them, the positions whose sector holds a square not seen earlier in the
// angle.
struct Angle {
    std::vector<int> sectors;  // rotation indices, all square corners
    std::vector<int> squares;  // 0..|sectors|-1 (kept for the gap logic)
    bool cyclic = false;
};

/// Maximal runs of consecutive square corners around v, broken at selected
/// (covered or border) edges and at hole sectors; only an interior vertex
/// with nothing selected yields a single cyclic angle.
std::vector<Angle> angles_at(const DualNet& n, const std::vector<bool>& covered, int v,
                             const std::vector<int>& rot) {
    int d = static_cast<int>(rot.size());
    auto edge_sep = [&](int i) {
        int e = rot[i] / 2;
        return n.border_edge[e] || covered[e];
    };
    auto square_sec = [&](int i) { return n.is_square(n.sector_face(rot[i])); };

    int first_sep = -1;
    for (int i = 0; i < d && first_sep == -1; ++i)
        if (edge_sep(i) || !square_sec(i)) first_sep = i;

    std::vector<Angle> out;
    auto finish = [&](Angle& a) {
        if (a.sectors.empty()) return;
        a.squares.resize(a.sectors.size());
        std::iota(a.squares.begin(), a.squares.end(), 0);
        out.push_back(std::move(a));
        a = Angle();
    };
    if (first_sep == -1) {
        Angle a;
        a.cyclic = true;
        for (int i = 0; i < d; ++i) a.sectors.push_back(i);
        finish(a);
        return out;
    }
    Angle cur;
    for (int s = 0; s < d; ++s) {
        int i = (first_sep + s) % d;
        if (edge_sep(i) && s > 0) finish(cur);
        if (square_sec(i))
            cur.sectors.push_back(i);
        else
            finish(cur);
    }
    finish(cur);
    return out;
}

// Enumerate gap subsets of size k over c-1 linear gaps (or c cyclic gaps)
// such that every run of squares between cuts has length <= 2.
void enumerate_gap_sets(int c, int k, bool cyclic, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    if (!cyclic) {
        // gaps 1..c-1; runs: [0, g1), [g1, g2), ..., [gk, c)
        auto rec = [&](auto&& self, int next, int last) -> void {
            if (static_cast<int>(cur.size()) == k) {
                if (c - last <= 2) out.push_back(cur);
                return;
            }
            for (int g = next; g <= c - 1; ++g) {
                if (g - last > 2) break;
                cur.push_back(g);
                self(self, g + 1, g);
                cur.pop_back();
            }
        };
        rec(rec, 1, 0);
    } else {
        // gaps 0..c-1, gap j sits after square j; arcs between consecutive
        // chosen gaps (cyclically) must have length <= 2
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == k) {
                int wrap = cur.front() + c - cur.back();
                if (wrap <= 2) out.push_back(cur);
                return;
            }
            int limit = cur.empty() ? c - 1 : std::min(cur.back() + 2, c - 1);
            for (int g = next; g <= limit; ++g) {
                if (!cur.empty() && g - cur.back() > 2) break;
                cur.push_back(g);
                self(self, g + 1);
                cur.pop_back();
            }
        };
        // first gap can only sit within distance 2 of the wrap-around
        rec(rec, 0);
    }
}

}  // namespace

CutSet greedy_rectangulate(const DualNet& n, const CutSet* seed, const std::vector<int>* order) {
    CutSet cs = seed ? *seed : CutSet(n);

    auto process = [&](int v) {
        for (int round = 0; round < 100; ++round) {
            if (saturates(n, cs.covered, v)) return;
            std::vector<int> rot = n.rotation(v);
            std::vector<Angle> angles = angles_at(n, cs.covered, v, rot);
            std::vector<int> chosen;  // edges to shoot
            for (const Angle& a : angles) {
                int c = static_cast<int>(a.squares.size());
                int need = a.cyclic ? (c + 1) / 2 : std::max((c + 1) / 2 - 1, 0);
                if (need == 0) continue;
                std::vector<std::vector<int>> gap_sets;
                enumerate_gap_sets(c, need, a.cyclic, gap_sets);
                // candidate edges per gap: rotation positions strictly after
                // square j up to (and including) square j+1
                auto candidates = [&](int gap) {
                    int qa = a.squares[a.cyclic ? gap : gap - 1];
                    int qb = a.squares[a.cyclic ? (gap + 1) % c : gap];
                    std::vector<int> edges;
                    int m = static_cast<int>(a.sectors.size());
                    for (int p = (qa + 1) % m; ; p = (p + 1) % m) {
                        int e = rot[a.sectors[p]] / 2;
                        if (!cs.covered[e] && !n.border_edge[e]) edges.push_back(e);
                        if (p == qb) break;
                    }
                    return edges;
                };
                long best_len = -1;
                std::vector<int> best;
                for (const auto& gs : gap_sets) {
                    long total = 0;
                    std::vector<int> pick;
                    bool feasible = true;
                    for (int gap : gs) {
                        std::vector<int> cand = candidates(gap);
                        long blen = -1;
                        int bedge = -1;
                        for (int e : cand) {
                            long len = static_cast<long>(shoot_segment(n, v, e, cs).edges.size());
                            if (bedge == -1 || len < blen || (len == blen && e < bedge)) {
                                blen = len;
                                bedge = e;
                            }
                        }
                        if (bedge == -1) {
                            feasible = false;
                            break;
                        }
                        total += blen;
                        pick.push_back(bedge);
                    }
                    if (!feasible) continue;
                    std::sort(pick.begin(), pick.end());
                    if (best_len == -1 || total < best_len ||
                        (total == best_len && pick < best)) {
                        best_len = total;
                        best = pick;
                    }
                }
                if (best_len == -1)
                    throw ValidationError("internal: no saturating edge choice at a vertex");
                chosen.insert(chosen.end(), best.begin(), best.end());
            }
            std::sort(chosen.begin(), chosen.end());
            chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
            for (int e : chosen)
                if (!cs.covered[e]) cs.add(shoot_segment(n, v, e, cs));
        }
        throw ValidationError("internal: greedy failed to saturate a vertex");
    };

    std::vector<int> verts;
    if (order) {
        verts = *order;
    } else {
        for (int v = 0; v < n.V(); ++v)
            if (n.exponent[v] > 0) verts.push_back(v);
    }
    for (int v : verts) process(v);

    // Safety net: shots can end at vertices outside the order.
    for (int pass = 0; pass < 100; ++pass) {
        bool clean = true;
        for (int v = 0; v < n.V(); ++v)
            if (!saturates(n, cs.covered, v)) {
                clean = false;
                process(v);
            }
        if (clean) return cs;
    }
    throw ValidationError("internal: greedy did not converge");
}

HoleIndex index_holes(const DualNet& n) {
    HoleIndex hi;
    for (int v = 0; v < n.V(); ++v)
        if (n.vkind[v] == VertexKind::vertex_hole) hi.vertex_holes.push_back(v);
    for (int f = 0; f < n.F(); ++f)
        if (!n.is_square(f)) hi.face_holes.push_back(f);
    return hi;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

const char* kNonRect = "internal: saturating cut-set produced a non-rectangular face";

// Verify one component is a rectangle via an explicit grid labeling and
// return its extent.
std::pair<int, int> grid_label(const DualNet& n, const CutSet& s, const std::vector<int>& squares) {
    std::map<int, std::pair<int, int>> pos;  // face -> (x, y)
    std::map<int, int> rho;                  // face -> orientation offset
    std::set<std::pair<int, int>> glued;     // unordered glued face pairs
    static const int DX[4] = {1, 0, -1, 0};
    static const int DY[4] = {0, 1, 0, -1};

    std::vector<int> queue{squares[0]};
    pos[squares[0]] = {0, 0};
    rho[squares[0]] = 0;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        const auto& walk = n.net.faces[f];
        for (int k = 0; k < 4; ++k) {
            int e = walk[k] / 2;
            if (n.border_edge[e] || s.covered[e]) continue;
            int tw = PlaneMap::twin(walk[k]);
            int g = n.net.face_of[tw];
            if (!n.is_square(g)) throw ValidationError(kNonRect);
            glued.insert({std::min(f, g), std::max(f, g)});
            int d = (k + rho[f]) % 4;
            std::pair<int, int> p{pos[f].first + DX[d], pos[f].second + DY[d]};
            const auto& gwalk = n.net.faces[g];
            int j = -1;
            for (int i = 0; i < 4; ++i)
                if (gwalk[i] == tw) j = i;
            int want = ((d + 2) - j % 4 + 8) % 4;
            auto it = pos.find(g);
            if (it == pos.end()) {
                pos[g] = p;
                rho[g] = want;
                queue.push_back(g);
            } else if (it->second != p || rho[g] != want) {
                throw ValidationError(kNonRect);
            }
        }
    }
    if (pos.size() != squares.size()) throw ValidationError(kNonRect);
    int xmin = 1 << 30, xmax = -(1 << 30), ymin = 1 << 30, ymax = -(1 << 30);
    std::set<std::pair<int, int>> cells;
    for (const auto& [f, p] : pos) {
        xmin = std::min(xmin, p.first);
        xmax = std::max(xmax, p.first);
        ymin = std::min(ymin, p.second);
        ymax = std::max(ymax, p.second);
        if (!cells.insert(p).second) throw ValidationError(kNonRect);
    }
    int a = xmax - xmin + 1, b = ymax - ymin + 1;
    if (a * b != static_cast<int>(squares.size())) throw ValidationError(kNonRect);
    // every grid-adjacent pair must be glued across an uncovered edge
    if (static_cast<int>(glued.size()) != 2 * a * b - a - b) throw ValidationError(kNonRect);

    // No edge may serve two perimeter sides: square-rings label like a 1xm
    // strip whose two short ends are the same covered edge.
    std::set<int> perimeter;
    for (int f : squares)
        for (int h : n.net.faces[f]) {
            int e = h / 2;
            if (!n.border_edge[e] && !s.covered[e]) continue;
            if (!perimeter.insert(e).second) throw ValidationError(kNonRect);
        }

    // Corner check: each lattice corner belongs to a single net vertex.
    // This rejects square-rings, which label like a grid but wrap around so
    // that two different vertices claim the central corner. (One vertex may
    // serve several corners: cells wrap around slit tips.)
    static const int CX[4] = {1, 1, 0, 0};
    static const int CY[4] = {0, 1, 1, 0};
    std::map<std::pair<int, int>, int> corner;
    for (int f : squares) {
        const auto& walk = n.net.faces[f];
        for (int k = 0; k < 4; ++k) {
            int d = (k + rho[f]) % 4;
            int v = n.net.origin[walk[k]];
            std::pair<int, int> p{pos[f].first + CX[d], pos[f].second + CY[d]};
            auto [it, fresh] = corner.try_emplace(p, v);
            if (!fresh && it->second != v) throw ValidationError(kNonRect);
        }
    }
    return {a, b};
}

}  // namespace

std::optional<std::pair<int, int>> rectangle_dims(const DualNet& n, const std::vector<int>& faces) {
    std::set<int> in(faces.begin(), faces.end());
    CutSet cs(n);
    for (int e = 0; e < n.E(); ++e) {
        int f1 = n.net.face_of[2 * e], f2 = n.net.face_of[2 * e + 1];
        cs.covered[e] = !(n.is_square(f1) && n.is_square(f2) && in.count(f1) && in.count(f2));
    }
    try {
        return grid_label(n, cs, faces);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

int Rectangulation::min_hole_segments() const {
    int m = -1;
    for (int k : hole_segments)
        if (m == -1 || k < m) m = k;
    return m;
}

Rectangulation extract_rectangulation(const DualNet& n, const CutSet& s) {
    if (!is_saturating(n, s)) throw ValidationError("not saturating");

    Rectangulation r{s};

    Dsu dsu(n.F());
    for (int e = 0; e < n.E(); ++e) {
        if (n.border_edge[e] || s.covered[e]) continue;
        int f1 = n.net.face_of[2 * e], f2 = n.net.face_of[2 * e + 1];
        if (!n.is_square(f1) || !n.is_square(f2)) throw ValidationError(kNonRect);
        dsu.unite(f1, f2);
    }
    std::map<int, int> rect_id;
    r.rect_of_square.assign(n.n_squares, -1);
    for (int f = 0; f < n.F(); ++f) {
        if (!n.is_square(f)) continue;
        int root = dsu.find(f);
        auto [it, fresh] = rect_id.try_emplace(root, static_cast<int>(r.rect_squares.size()));
        if (fresh) r.rect_squares.emplace_back();
        r.rect_squares[it->second].push_back(f);
        r.rect_of_square[n.face_tag[f]] = it->second;
    }
    for (const auto& squares : r.rect_squares) r.rect_dims.push_back(grid_label(n, s, squares));

    r.R = static_cast<int>(r.rect_squares.size());
    r.S = s.size();
    r.H = n.H;
    if (r.R - r.S + r.H != 2)
        throw ValidationError("internal: rectangle count violates the Euler identity");

    // Incident segments per hole (ends only; segments cannot pass through a
    // hole).
    HoleIndex hi = index_holes(n);
    std::map<int, int> vertex_hole_idx;
    for (size_t i = 0; i < hi.vertex_holes.size(); ++i) vertex_hole_idx[hi.vertex_holes[i]] = static_cast<int>(i);
    std::map<int, std::vector<int>> border_holes;  // border vertex -> hole idx list
    for (size_t i = 0; i < hi.face_holes.size(); ++i) {
        std::set<int> verts;
        for (int h : n.net.faces[hi.face_holes[i]]) verts.insert(n.net.origin[h]);
        for (int v : verts)
            border_holes[v].push_back(static_cast<int>(hi.vertex_holes.size() + i));
    }
    // Incidences count with multiplicity: a segment with both ends on the
    // same hole contributes two.
    r.hole_segments.assign(hi.count(), 0);
    for (int si = 0; si < s.size(); ++si) {
        for (const SegmentEnd* end : {&s.segments[si].front, &s.segments[si].back}) {
            if (end->kind == SegmentEnd::at_hole)
                r.hole_segments[vertex_hole_idx.at(end->vertex)]++;
            else if (end->kind == SegmentEnd::at_border)
                for (int h : border_holes[end->vertex]) r.hole_segments[h]++;
        }
    }
    return r;
}

namespace {

std::vector<bool> separating_edges(const DualNet& n, const std::vector<int>& rect_of_square) {
    std::vector<bool> separating(n.E(), false);
    for (int e = 0; e < n.E(); ++e) {
        if (n.border_edge[e]) continue;
        int f1 = n.net.face_of[2 * e], f2 = n.net.face_of[2 * e + 1];
        if (!n.is_square(f1) || !n.is_square(f2))
            throw ValidationError("interior edge not between two squares");
        separating[e] = rect_of_square[n.face_tag[f1]] != rect_of_square[n.face_tag[f2]];
    }
    return separating;
}

}  // namespace

std::vector<int> ambiguous_vertices(const DualNet& n, const std::vector<int>& rect_of_square) {
    std::vector<bool> separating = separating_edges(n, rect_of_square);
    std::vector<int> out;
    for (int v = 0; v < n.V(); ++v) {
        if (n.vkind[v] != VertexKind::regular) continue;
        std::vector<int> rot = n.rotation(v);
        if (std::all_of(rot.begin(), rot.end(), [&](int h) { return separating[h / 2]; }))
            out.push_back(v);
    }
    return out;
}

CutSet delimiting_cutset(const DualNet& n, const std::vector<int>& rect_of_square,
                         const std::map<int, int>* through) {
    std::vector<bool> separating = separating_edges(n, rect_of_square);

    // At regular vertices with all four edges separating, the through-pair
    // is the opposite pair holding the lowest edge id unless overridden.
    auto continues = [&](int v, int e_in, int e_out) {
        std::vector<int> rot = n.rotation(v);
        int cnt = 0, emin = 1 << 30;
        for (int h : rot)
            if (separating[h / 2]) {
                ++cnt;
                emin = std::min(emin, h / 2);
            }
        if (cnt != 4) return true;
        if (through) {
            auto it = through->find(v);
            if (it != through->end()) emin = it->second;
        }
        return e_in == emin || e_out == emin;
    };

    CutSet cs(n);
    for (int e0 = 0; e0 < n.E(); ++e0) {
        if (!separating[e0] || cs.covered[e0]) continue;
        // grow in both directions from e0
        std::vector<int> halves{2 * e0};  // directed along the path
        for (int dir = 0; dir < 2; ++dir) {
            int h = dir == 0 ? halves.back() : PlaneMap::twin(halves.front());
            for (;;) {
                int u = n.net.origin[PlaneMap::twin(h)];
                if (n.vkind[u] != VertexKind::regular) break;
                int h2 = opposite_out(n, h);
                if (h2 == -1) break;
                int e2 = h2 / 2;
                if (!separating[e2] || cs.covered[e2]) break;
                if (!continues(u, h / 2, e2)) break;
                if (dir == 0) {
                    halves.push_back(h2);
                    h = h2;
                } else {
                    halves.insert(halves.begin(), PlaneMap::twin(h2));
                    h = h2;
                }
            }
        }
        Segment seg;
        seg.vertices.push_back(n.net.origin[halves.front()]);
        for (int h : halves) {
            seg.edges.push_back(h / 2);
            seg.vertices.push_back(n.net.origin[PlaneMap::twin(h)]);
        }
        seg.front = end_at(n, seg.vertices.front());
        seg.back = end_at(n, seg.vertices.back());
        cs.add(seg);
    }
    for (int e = 0; e < n.E(); ++e)
        if (separating[e] && !cs.covered[e])
            throw ValidationError("internal: separating edge left uncovered");
    return cs;
}

Bundling to_bundling(const DualNet& n, const Rectangulation& r) {
    Bundling b;
    b.R = r.R;
    b.S = r.S;
    b.H = r.H;
    b.t = detect_toothed_holes(n);

    const Arrangement& arr = n.g.plan.arr;
    for (int rect = 0; rect < r.R; ++rect) {
        std::vector<int> ids;
        for (int f : r.rect_squares[rect]) ids.push_back(arr.crossings[n.face_tag[f]].id);
        std::sort(ids.begin(), ids.end());
        b.bundles.push_back(std::move(ids));
    }
    std::sort(b.bundles.begin(), b.bundles.end());

    // Independent check: the crossings of each bundle form an a x b grid
    // pattern under string adjacency.
    for (int rect = 0; rect < r.R; ++rect) {
        std::set<int> members;
        for (int f : r.rect_squares[rect]) members.insert(arr.crossings[n.face_tag[f]].id);
        std::map<int, int> deg;
        int edges = 0;
        for (const auto& s : arr.strings) {
            int m = static_cast<int>(s.crossings.size());
            int limit = s.closed ? m : m - 1;
            for (int i = 0; i < limit; ++i) {
                int a = s.crossings[i], c = s.crossings[(i + 1) % m];
                if (members.count(a) && members.count(c)) {
                    ++edges;
                    ++deg[a];
                    ++deg[c];
                }
            }
        }
        auto [ga, gb] = r.rect_dims[rect];
        if (edges != ga * (gb - 1) + gb * (ga - 1))
            throw ValidationError("internal: bundle is not a grid pattern");
        std::map<int, int> want, got;
        for (int x = 0; x < ga; ++x)
            for (int y = 0; y < gb; ++y) {
                int d = (x > 0) + (x < ga - 1) + (y > 0) + (y < gb - 1);
                ++want[d];
            }
        for (int id : members) ++got[deg.count(id) ? deg[id] : 0];
        if (want != got) throw ValidationError("internal: bundle is not a grid pattern");
    }
    return b;
}

std::string bundling_to_json(const Bundling& b) {
    nlohmann::ordered_json j;
    j["bundles"] = b.bundles;
    j["R"] = b.R;
    j["S"] = b.S;
    j["H"] = b.H;
    j["t"] = b.t;
    return j.dump(2) + "\n";
}

}  // namespace bundling
