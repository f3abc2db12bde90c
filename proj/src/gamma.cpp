#include <algorithm>
#include <map>
#include <set>

#include "bundling/rectangulation.hpp"

namespace bundling {

namespace {

const char* kGammaInternal = "internal: gamma construction failed";

struct PreEdge {
    int a = -1, b = -1;     // pre-vertex endpoints
    int seg = -1;           // segment id, -1 for border / expansion pieces
    int tag_ab = -1;        // face tag left of a->b (-1 unknown)
    int tag_ba = -1;
    int expansion = -1;     // expansion vertex for run edges
};

}  // namespace

GammaGraph build_gamma(const DualNet& n, const Rectangulation& r) {
    GammaGraph g;
    g.R = r.R;
    g.H = r.H;
    g.S = r.S;
    g.min_hole_segments = r.min_hole_segments();
    HoleIndex hi = index_holes(n);
    std::map<int, int> vh_idx, fh_idx;
    for (size_t i = 0; i < hi.vertex_holes.size(); ++i) vh_idx[hi.vertex_holes[i]] = static_cast<int>(i);
    for (size_t i = 0; i < hi.face_holes.size(); ++i)
        fh_idx[hi.face_holes[i]] = static_cast<int>(hi.vertex_holes.size() + i);

    if (r.S == 0) {
        g.degenerate = true;
        return g;
    }
    const CutSet& cs = r.cutset;

    auto tag_of_net_half = [&](int h) {
        int f = n.net.face_of[h];
        if (n.is_square(f)) return r.rect_of_square[n.face_tag[f]];
        return g.R + fh_idx.at(f);
    };
    auto in_h = [&](int e) { return n.border_edge[e] || cs.covered[e]; };

    // Transformation per net vertex.
    enum class Kind { none, keep, split, expand };
    std::vector<Kind> kind(n.V(), Kind::none);
    std::vector<std::vector<int>> hh(n.V());  // H-halves in rotation order
    for (int v = 0; v < n.V(); ++v) {
        for (int h : n.rotation(v))
            if (in_h(h / 2)) hh[v].push_back(h);
        int d = static_cast<int>(hh[v].size());
        if (d == 0) continue;
        if (n.vkind[v] == VertexKind::vertex_hole)
            kind[v] = Kind::expand;
        else if (n.vkind[v] == VertexKind::border && d >= 4)
            kind[v] = Kind::expand;
        else if (n.vkind[v] == VertexKind::regular && d == 4)
            kind[v] = Kind::split;
        else
            kind[v] = Kind::keep;
    }

    int nv = 0;
    std::map<int, int> attach;                   // net half -> pre-vertex at its origin side
    std::map<int, std::pair<int, int>> split_v;  // net vertex -> (v1, v2)
    std::vector<PreEdge> pre;
    std::vector<std::vector<int>> rot;  // pre-vertex -> directed pre-halves

    // Vertices and attachment points.
    for (int v = 0; v < n.V(); ++v) {
        if (kind[v] == Kind::none) continue;
        if (kind[v] == Kind::keep) {
            for (int h : hh[v]) attach[h] = nv;
            ++nv;
        } else if (kind[v] == Kind::split) {
            // rotation (a, b, c, d); the through-pair becomes (a, c)
            auto& q = hh[v];
            int seg02 = (cs.seg_of_edge[q[0] / 2] == cs.seg_of_edge[q[2] / 2]) ? cs.seg_of_edge[q[0] / 2] : -1;
            int seg13 = (cs.seg_of_edge[q[1] / 2] == cs.seg_of_edge[q[3] / 2]) ? cs.seg_of_edge[q[1] / 2] : -1;
            if ((seg02 == -1) == (seg13 == -1)) throw ValidationError(kGammaInternal);
            if (seg13 != -1) std::rotate(q.begin(), q.begin() + 1, q.end());
            attach[q[0]] = nv;
            attach[q[1]] = nv;
            attach[q[2]] = nv + 1;
            attach[q[3]] = nv + 1;
            split_v[v] = {nv, nv + 1};
            nv += 2;
        } else {
            for (int h : hh[v]) attach[h] = nv++;  // one midpoint per incident edge end
        }
    }

    // One pre-edge per H net edge, oriented like the net edge.
    std::map<int, int> edge_pre;  // net edge -> pre-edge id
    for (int e = 0; e < n.E(); ++e) {
        if (!in_h(e)) continue;
        PreEdge pe;
        pe.a = attach.at(2 * e);
        pe.b = attach.at(2 * e + 1);
        pe.seg = cs.seg_of_edge[e];
        pe.tag_ab = tag_of_net_half(2 * e);
        pe.tag_ba = tag_of_net_half(2 * e + 1);
        edge_pre[e] = static_cast<int>(pre.size());
        pre.push_back(pe);
    }
    // Directed pre-half at the origin side of net half h.
    auto side_half = [&](int h) {
        int i = edge_pre.at(h / 2);
        return (h % 2 == 0) ? 2 * i : 2 * i + 1;
    };

    rot.assign(nv, {});
    std::vector<int> half_count;  // filled after all edges exist

    for (int v = 0; v < n.V(); ++v) {
        if (kind[v] == Kind::keep) {
            int pv = attach.at(hh[v][0]);
            for (int h : hh[v]) rot[pv].push_back(side_half(h));
        } else if (kind[v] == Kind::split) {
            auto [v1, v2] = split_v[v];
            PreEdge pe;
            pe.a = v1;
            pe.b = v2;
            pe.seg = cs.seg_of_edge[hh[v][0] / 2];  // the through segment
            int k = static_cast<int>(pre.size());
            pre.push_back(pe);
            rot[v1] = {side_half(hh[v][0]), side_half(hh[v][1]), 2 * k};
            rot[v2] = {2 * k + 1, side_half(hh[v][2]), side_half(hh[v][3])};
        } else if (kind[v] == Kind::expand) {
            // Cut the cyclic half list wherever the gap to the next H-half
            // holds a boundary-hole; each piece becomes a path of midpoints,
            // no cut at all gives a cycle.
            int d = static_cast<int>(hh[v].size());
            std::vector<int> full = n.rotation(v);
            int m = static_cast<int>(full.size());
            auto gap_has_hole = [&](int i) {
                int from = -1, to = -1;
                for (int p = 0; p < m; ++p) {
                    if (full[p] == hh[v][i]) from = p;
                    if (full[p] == hh[v][(i + 1) % d]) to = p;
                }
                int span = (to - from + m) % m;
                if (span == 0) span = m;
                for (int s = 0; s < span; ++s)
                    if (!n.is_square(n.sector_face(full[(from + s) % m]))) return true;
                return false;
            };
            std::vector<int> cuts;  // cut after index i
            for (int i = 0; i < d; ++i)
                if (gap_has_hole(i)) cuts.push_back(i);
            std::vector<std::vector<int>> runs;
            if (cuts.empty()) {
                runs.push_back(hh[v]);
            } else {
                for (size_t c = 0; c < cuts.size(); ++c) {
                    int from = (cuts[c] + 1) % d;
                    int to = cuts[(c + 1) % cuts.size()];
                    std::vector<int> run;
                    for (int i = from;; i = (i + 1) % d) {
                        run.push_back(hh[v][i]);
                        if (i == to) break;
                    }
                    runs.push_back(std::move(run));
                }
            }
            bool cyclic = cuts.empty();
            for (const auto& run : runs) {
                int len = static_cast<int>(run.size());
                std::vector<int> run_edges(len, -1);  // edge from midpoint i to i+1
                int limit = cyclic ? len : len - 1;
                for (int i = 0; i < limit; ++i) {
                    PreEdge pe;
                    pe.a = attach.at(run[i]);
                    pe.b = attach.at(run[(i + 1) % len]);
                    pe.expansion = v;
                    run_edges[i] = static_cast<int>(pre.size());
                    pre.push_back(pe);
                }
                for (int i = 0; i < len; ++i) {
                    int pv = attach.at(run[i]);
                    // counterclockwise: outward, toward next, toward previous
                    rot[pv].push_back(side_half(run[i]));
                    if (run_edges[i] != -1) rot[pv].push_back(2 * run_edges[i]);
                    int prev = (i + len - 1) % len;
                    if ((cyclic || i > 0) && run_edges[prev] != -1)
                        rot[pv].push_back(2 * run_edges[prev] + 1);
                }
            }
        }
    }

    // Suppress degree-2 vertices: final edges are maximal chains.
    int nh = 2 * static_cast<int>(pre.size());
    auto origin_of = [&](int ph) { return (ph % 2 == 0) ? pre[ph / 2].a : pre[ph / 2].b; };
    std::vector<int> deg(nv, 0);
    for (int v = 0; v < nv; ++v) deg[v] = static_cast<int>(rot[v].size());

    std::vector<int> keep_id(nv, -1);
    for (int v = 0; v < nv; ++v)
        if (deg[v] != 2) {
            keep_id[v] = g.num_vertices++;
        }
    if (g.num_vertices == 0) throw ValidationError(kGammaInternal);

    // other half at a degree-2 vertex
    auto other_at = [&](int v, int ph) {
        return rot[v][0] == ph ? rot[v][1] : rot[v][0];
    };

    std::vector<int> final_half(nh, -1);  // pre-half -> final half (for kept origins)
    std::vector<int> forig, fnext;
    std::vector<int> fseg, ftag_l;  // per final half: left tag; per edge: segment
    std::vector<int> fexp;          // per final half: expansion vertex or -1

    auto walk_chain = [&](int start_ph) {
        // start_ph originates at a kept vertex
        int seg = -1, tag_l = -1, tag_r = -1, exp = -1;
        int ph = start_ph;
        int guard = 0;
        for (;;) {
            const PreEdge& pe = pre[ph / 2];
            int s = pe.seg;
            int tl = (ph % 2 == 0) ? pe.tag_ab : pe.tag_ba;
            int tr = (ph % 2 == 0) ? pe.tag_ba : pe.tag_ab;
            if (s != -1) {
                if (seg != -1 && seg != s) throw ValidationError(kGammaInternal);
                seg = s;
            }
            if (tl != -1) {
                if (tag_l != -1 && tag_l != tl) throw ValidationError(kGammaInternal);
                tag_l = tl;
            }
            if (tr != -1) {
                if (tag_r != -1 && tag_r != tr) throw ValidationError(kGammaInternal);
                tag_r = tr;
            }
            if (pe.expansion != -1) exp = pe.expansion;
            int head = origin_of(PlaneMap::twin(ph));
            if (deg[head] != 2) return std::make_tuple(PlaneMap::twin(ph), seg, tag_l, tag_r, exp);
            ph = other_at(head, PlaneMap::twin(ph));
            if (++guard > nh) throw ValidationError(kGammaInternal);
        }
    };

    // Create final edges from chains.
    std::map<int, int> chain_end;  // starting pre-half -> final half id
    for (int v = 0; v < nv; ++v) {
        if (keep_id[v] == -1) continue;
        for (int ph : rot[v]) {
            if (final_half[ph] != -1) continue;
            auto [last_ph, seg, tag_l, tag_r, exp] = walk_chain(ph);
            int e = static_cast<int>(forig.size()) / 2;
            forig.push_back(keep_id[v]);
            forig.push_back(keep_id[origin_of(last_ph)]);
            fseg.push_back(seg);
            ftag_l.push_back(tag_l);
            ftag_l.push_back(tag_r);
            fexp.push_back(exp);
            fexp.push_back(exp);
            final_half[ph] = 2 * e;
            final_half[last_ph] = 2 * e + 1;
        }
    }
    // Rotations on final halves.
    fnext.assign(forig.size(), -1);
    for (int v = 0; v < nv; ++v) {
        if (keep_id[v] == -1) continue;
        const auto& rv = rot[v];
        int d = static_cast<int>(rv.size());
        for (int i = 0; i < d; ++i) fnext[final_half[rv[i]]] = final_half[rv[(i + 1) % d]];
    }

    g.origin = std::move(forig);
    g.next_rot = std::move(fnext);
    g.edge_segment = std::move(fseg);

    // Trace faces and tag them.
    PlaneMap pm;
    pm.num_vertices = g.num_vertices;
    pm.origin = g.origin;
    pm.next_rot = g.next_rot;
    pm.trace_faces();
    g.faces = pm.faces;
    g.face_tag.assign(g.faces.size(), -1);
    for (size_t f = 0; f < g.faces.size(); ++f) {
        int tag = -1, exp = -1;
        bool all_exp = true;
        for (int h : g.faces[f]) {
            if (ftag_l[h] != -1) {
                if (tag != -1 && tag != ftag_l[h]) throw ValidationError(kGammaInternal);
                tag = ftag_l[h];
            }
            if (fexp[h] != -1)
                exp = fexp[h];
            else
                all_exp = false;
        }
        if (tag == -1 && all_exp && exp != -1 && vh_idx.count(exp))
            tag = g.R + vh_idx.at(exp);
        if (tag == -1) throw ValidationError(kGammaInternal);
        g.face_tag[f] = tag;
    }
    return g;
}

GammaReport gamma_checks(const GammaGraph& g) {
    GammaReport rep;
    rep.simple_expected = g.min_hole_segments >= 3;
    if (g.degenerate) {
        rep.cubic = rep.counts_ok = rep.dual_triangulated = rep.holes_independent = true;
        rep.simple = false;
        rep.simple_expected = false;
        rep.notes.push_back("degenerate: no segments, graph empty (single rectangle)");
        return rep;
    }

    std::vector<int> deg(g.num_vertices, 0);
    for (int v : g.origin) ++deg[v];
    rep.cubic = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
    rep.dual_triangulated = rep.cubic;  // dual face walks equal vertex degrees

    rep.counts_ok = g.num_vertices == 2 * g.S && g.num_edges() == 3 * g.S &&
                    g.num_faces() == g.R + g.H;
    // every rectangle / hole tag appears on exactly one face
    std::set<int> tags(g.face_tag.begin(), g.face_tag.end());
    if (static_cast<int>(tags.size()) != g.num_faces() ||
        (!tags.empty() && (*tags.begin() != 0 || *tags.rbegin() != g.R + g.H - 1))) {
        rep.counts_ok = false;
        rep.notes.push_back("face tags are not a bijection onto rectangles and holes");
    }

    PlaneMap pm;
    pm.num_vertices = g.num_vertices;
    pm.origin = g.origin;
    pm.next_rot = g.next_rot;
    pm.trace_faces();

    rep.holes_independent = true;
    for (int e = 0; e < g.num_edges(); ++e)
        if (g.face_tag[pm.face_of[2 * e]] >= g.R && g.face_tag[pm.face_of[2 * e + 1]] >= g.R)
            rep.holes_independent = false;

    bool simple = true;
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < g.num_edges(); ++e) {
        int a = g.origin[2 * e], b = g.origin[2 * e + 1];
        if (a == b) simple = false;
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) simple = false;
    }
    std::set<std::pair<int, int>> fseen;
    for (int e = 0; e < g.num_edges(); ++e) {
        int a = pm.face_of[2 * e], b = pm.face_of[2 * e + 1];
        if (a == b) simple = false;  // loop in the dual
        if (!fseen.insert({std::min(a, b), std::max(a, b)}).second) simple = false;
    }
    rep.simple = simple;
    if (rep.simple && !rep.simple_expected)
        rep.notes.push_back("simple despite a hole with fewer than three incidences");
    return rep;
}

}  // namespace bundling
