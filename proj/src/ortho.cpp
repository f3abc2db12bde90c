#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "bundling/ortho.hpp"

namespace bundling {

namespace {

const std::array<Cell, 4> kQuads{{{-1, -1}, {0, -1}, {-1, 0}, {0, 0}}};

Cell quad_cell(Point p, Cell q) { return {p.first + q.first, p.second + q.second}; }

}  // namespace

int OrthoPolygon::point_cells(Point p) const {
    int c = 0;
    for (Cell q : kQuads) c += cells.count(quad_cell(p, q));
    return c;
}

void OrthoPolygon::validate() const {
    if (cells.empty()) throw ValidationError("degenerate polygon");
    // connectivity over shared unit edges
    std::set<Cell> seen{*cells.begin()};
    std::vector<Cell> queue{*cells.begin()};
    while (!queue.empty()) {
        auto [x, y] = queue.back();
        queue.pop_back();
        for (Cell d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
            Cell c{x + d.first, y + d.second};
            if (cells.count(c) && seen.insert(c).second) queue.push_back(c);
        }
    }
    if (seen.size() != cells.size()) throw ValidationError("polygon is disconnected");
    // pinch points: two diagonally opposite cells only
    int xmin = 1 << 30, xmax = -(1 << 30), ymin = 1 << 30, ymax = -(1 << 30);
    for (auto [x, y] : cells) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    for (int x = xmin; x <= xmax + 1; ++x)
        for (int y = ymin; y <= ymax + 1; ++y) {
            Point p{x, y};
            if (point_cells(p) != 2) continue;
            bool ne = cells.count(quad_cell(p, kQuads[3])), sw = cells.count(quad_cell(p, kQuads[0]));
            bool nw = cells.count(quad_cell(p, kQuads[2])), se = cells.count(quad_cell(p, kQuads[1]));
            if ((ne && sw) || (nw && se)) throw ValidationError("polygon has a pinch point");
        }
    // simply connected: flood the complement from outside the bounding box
    std::set<Cell> out;
    std::vector<Cell> oq{{xmin - 1, ymin - 1}};
    out.insert(oq[0]);
    while (!oq.empty()) {
        auto [x, y] = oq.back();
        oq.pop_back();
        for (Cell d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
            Cell c{x + d.first, y + d.second};
            if (c.first < xmin - 1 || c.first > xmax + 1 || c.second < ymin - 1 || c.second > ymax + 1)
                continue;
            if (!cells.count(c) && out.insert(c).second) oq.push_back(c);
        }
    }
    for (int x = xmin; x <= xmax; ++x)
        for (int y = ymin; y <= ymax; ++y)
            if (!cells.count({x, y}) && !out.count({x, y}))
                throw ValidationError("polygon has an interior hole");
}

std::vector<std::pair<Point, Cell>> OrthoPolygon::concave_corners() const {
    std::vector<std::pair<Point, Cell>> out;
    int xmin = 1 << 30, xmax = -(1 << 30), ymin = 1 << 30, ymax = -(1 << 30);
    for (auto [x, y] : cells) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    for (int x = xmin; x <= xmax + 1; ++x)
        for (int y = ymin; y <= ymax + 1; ++y) {
            Point p{x, y};
            if (point_cells(p) != 3) continue;
            for (Cell q : kQuads)
                if (!cells.count(quad_cell(p, q))) out.push_back({p, q});
        }
    return out;
}

std::vector<Point> OrthoSegment::points() const {
    std::vector<Point> out;
    int dx = (b.first > a.first) - (a.first > b.first);
    int dy = (b.second > a.second) - (a.second > b.second);
    Point p = a;
    out.push_back(p);
    while (p != b) {
        p = {p.first + dx, p.second + dy};
        out.push_back(p);
    }
    return out;
}

namespace {

// Resolving directions at a concave corner: away from the missing quadrant.
int resolve_dx(Cell q) { return q.first == 0 ? -1 : 1; }
int resolve_dy(Cell q) { return q.second == 0 ? -1 : 1; }

bool strip_interior_h(const OrthoPolygon& p, int x1, int x2, int y) {
    for (int x = x1; x < x2; ++x)
        if (!p.cell(x, y) || !p.cell(x, y - 1)) return false;
    return true;
}

bool strip_interior_v(const OrthoPolygon& p, int y1, int y2, int x) {
    for (int y = y1; y < y2; ++y)
        if (!p.cell(x, y) || !p.cell(x - 1, y)) return false;
    return true;
}

bool seg_contains(const OrthoSegment& s, Point p) {
    if (s.horizontal())
        return p.second == s.a.second && s.a.first <= p.first && p.first <= s.b.first;
    return p.first == s.a.first && s.a.second <= p.second && p.second <= s.b.second;
}

// A corner counts as resolved only by a segment leaving it in a resolving
// direction.
bool corner_resolved(const std::vector<OrthoSegment>& segs, Point p, Cell q) {
    Point h{p.first + resolve_dx(q), p.second};
    Point v{p.first, p.second + resolve_dy(q)};
    for (const OrthoSegment& s : segs) {
        if (!seg_contains(s, p)) continue;
        if (s.horizontal() && seg_contains(s, h)) return true;
        if (!s.horizontal() && seg_contains(s, v)) return true;
    }
    return false;
}

// Shoot from p in direction (dx, dy) until the first point on the polygon
// boundary or on an existing segment.
OrthoSegment shoot(const OrthoPolygon& p, const std::vector<OrthoSegment>& segs, Point from, int dx,
                   int dy) {
    Point cur = from;
    for (;;) {
        Point nxt{cur.first + dx, cur.second + dy};
        cur = nxt;
        if (p.point_cells(nxt) < 4) break;
        bool hit = false;
        for (const OrthoSegment& s : segs)
            if (seg_contains(s, nxt)) hit = true;
        if (hit) break;
    }
    OrthoSegment s{std::min(from, cur), std::max(from, cur)};
    return s;
}

// Region count, verifying every region is a rectangle of cells.
int count_regions(const OrthoPolygon& p, const std::vector<OrthoSegment>& segs) {
    std::set<std::pair<Point, Point>> cut;  // unit lattice edges covered by segments
    for (const OrthoSegment& s : segs) {
        auto pts = s.points();
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            cut.insert({std::min(pts[i], pts[i + 1]), std::max(pts[i], pts[i + 1])});
    }
    std::map<Cell, int> id;
    for (Cell c : p.cells) id.emplace(c, static_cast<int>(id.size()));
    std::vector<int> par(id.size());
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](auto&& self, int x) -> int { return par[x] == x ? x : par[x] = self(self, par[x]); };
    for (auto [x, y] : p.cells) {
        if (p.cell(x + 1, y) &&
            !cut.count({{x + 1, y}, {x + 1, y + 1}}))
            par[find(find, id.at({x, y}))] = find(find, id.at({x + 1, y}));
        if (p.cell(x, y + 1) &&
            !cut.count({{x, y + 1}, {x + 1, y + 1}}))
            par[find(find, id.at({x, y}))] = find(find, id.at({x, y + 1}));
    }
    std::map<int, std::vector<Cell>> regions;
    for (auto [c, i] : id) regions[find(find, i)].push_back(c);
    for (const auto& [root, cs] : regions) {
        int xmin = 1 << 30, xmax = -(1 << 30), ymin = 1 << 30, ymax = -(1 << 30);
        for (auto [x, y] : cs) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        if ((xmax - xmin + 1) * (ymax - ymin + 1) != static_cast<int>(cs.size()))
            throw ValidationError("internal: cut produced a non-rectangular region");
    }
    return static_cast<int>(regions.size());
}

OrthoResult finish(const OrthoPolygon& p, std::vector<OrthoSegment> segs) {
    OrthoResult r;
    r.segments = std::move(segs);
    r.S = static_cast<int>(r.segments.size());
    r.R = count_regions(p, r.segments);
    if (r.R != r.S + 1) throw ValidationError("internal: rectangulation violates R = S + 1");
    return r;
}

}  // namespace

std::vector<OrthoSegment> good_segments(const OrthoPolygon& p) {
    auto corners = p.concave_corners();
    std::vector<OrthoSegment> out;
    for (size_t i = 0; i < corners.size(); ++i)
        for (size_t j = i + 1; j < corners.size(); ++j) {
            auto [pi, qi] = corners[i];
            auto [pj, qj] = corners[j];
            if (pi.second == pj.second && pi.first != pj.first) {
                auto [l, r] = std::minmax(corners[i], corners[j]);
                if (resolve_dx(l.second) == 1 && resolve_dx(r.second) == -1 &&
                    strip_interior_h(p, l.first.first, r.first.first, l.first.second))
                    out.push_back({l.first, r.first});
            } else if (pi.first == pj.first && pi.second != pj.second) {
                auto lo = pi.second < pj.second ? corners[i] : corners[j];
                auto hi = pi.second < pj.second ? corners[j] : corners[i];
                if (resolve_dy(lo.second) == 1 && resolve_dy(hi.second) == -1 &&
                    strip_interior_v(p, lo.first.second, hi.first.second, lo.first.first))
                    out.push_back({lo.first, hi.first});
            }
        }
    return out;
}

OrthoResult ortho_exact(const OrthoPolygon& p) {
    p.validate();
    auto corners = p.concave_corners();
    auto good = good_segments(p);
    std::vector<int> hs, vs;
    for (size_t i = 0; i < good.size(); ++i)
        (good[i].horizontal() ? hs : vs).push_back(static_cast<int>(i));

    // conflicts: a horizontal and a vertical good segment sharing a point
    std::vector<std::vector<int>> adj(hs.size());
    for (size_t a = 0; a < hs.size(); ++a)
        for (size_t b = 0; b < vs.size(); ++b) {
            const OrthoSegment& h = good[hs[a]];
            const OrthoSegment& v = good[vs[b]];
            if (h.a.first <= v.a.first && v.a.first <= h.b.first && v.a.second <= h.a.second &&
                h.a.second <= v.b.second)
                adj[a].push_back(static_cast<int>(b));
        }

    // maximum matching (augmenting paths), then a minimum vertex cover and
    // its complementary maximum independent set
    std::vector<int> match_v(vs.size(), -1), match_h(hs.size(), -1);
    std::vector<bool> used;
    auto aug = [&](auto&& self, int a) -> bool {
        for (int b : adj[a]) {
            if (used[b]) continue;
            used[b] = true;
            if (match_v[b] == -1 || self(self, match_v[b])) {
                match_v[b] = a;
                match_h[a] = b;
                return true;
            }
        }
        return false;
    };
    for (size_t a = 0; a < hs.size(); ++a) {
        used.assign(vs.size(), false);
        aug(aug, static_cast<int>(a));
    }
    std::vector<bool> zh(hs.size(), false), zv(vs.size(), false);
    std::vector<int> stack;
    for (size_t a = 0; a < hs.size(); ++a)
        if (match_h[a] == -1) {
            zh[a] = true;
            stack.push_back(static_cast<int>(a));
        }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : adj[a])
            if (!zv[b]) {
                zv[b] = true;
                if (match_v[b] != -1 && !zh[match_v[b]]) {
                    zh[match_v[b]] = true;
                    stack.push_back(match_v[b]);
                }
            }
    }
    std::vector<OrthoSegment> chosen;  // independent = (H ∩ Z) ∪ (V \ Z)
    for (size_t a = 0; a < hs.size(); ++a)
        if (zh[a]) chosen.push_back(good[hs[a]]);
    for (size_t b = 0; b < vs.size(); ++b)
        if (!zv[b]) chosen.push_back(good[vs[b]]);

    for (auto [pt, q] : corners)
        if (!corner_resolved(chosen, pt, q))
            chosen.push_back(shoot(p, chosen, pt, resolve_dx(q), 0));
    return finish(p, std::move(chosen));
}

OrthoResult ortho_greedy(const OrthoPolygon& p) {
    p.validate();
    std::vector<OrthoSegment> segs;
    for (auto [pt, q] : p.concave_corners())
        if (!corner_resolved(segs, pt, q)) segs.push_back(shoot(p, segs, pt, resolve_dx(q), 0));
    return finish(p, std::move(segs));
}

int ortho_brute_force_rects(const OrthoPolygon& p) {
    p.validate();
    std::vector<Cell> order(p.cells.begin(), p.cells.end());
    std::sort(order.begin(), order.end(),
              [](Cell a, Cell b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
    std::map<Cell, int> id;
    for (size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<int>(i);
    int n = static_cast<int>(order.size());
    if (n > 62) throw ValidationError("instance too large for oracle");
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::unordered_map<uint64_t, int> memo;

    auto rec = [&](auto&& self, uint64_t covered) -> int {
        if (covered == full) return 0;
        auto it = memo.find(covered);
        if (it != memo.end()) return it->second;
        int q = std::countr_zero(~covered);
        auto [x0, y0] = order[q];
        int best = 1 << 28;
        // the first row-major uncovered cell is the bottom-left corner of
        // its rectangle
        auto avail = [&](int x, int y) {
            auto it2 = id.find({x, y});
            return it2 != id.end() && !(covered >> it2->second & 1);
        };
        for (int w = 1; avail(x0 + w - 1, y0); ++w) {
            uint64_t add = 0;
            for (int h = 1;; ++h) {
                bool row_ok = true;
                for (int x = x0; x < x0 + w; ++x) row_ok = row_ok && avail(x, y0 + h - 1);
                if (!row_ok) break;
                for (int x = x0; x < x0 + w; ++x) add |= uint64_t{1} << id.at({x, y0 + h - 1});
                best = std::min(best, 1 + self(self, covered | add));
            }
        }
        memo[covered] = best;
        return best;
    };
    return rec(rec, 0);
}

OrthoPolygon gen_ortho(unsigned seed, int max_cells) {
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        OrthoPolygon p;
        int rects = 2 + static_cast<int>(rng() % 3);
        for (int r = 0; r < rects; ++r) {
            int x0 = static_cast<int>(rng() % 5), y0 = static_cast<int>(rng() % 5);
            int w = 1 + static_cast<int>(rng() % 4), h = 1 + static_cast<int>(rng() % 4);
            for (int x = x0; x < x0 + w; ++x)
                for (int y = y0; y < y0 + h; ++y) p.cells.insert({x, y});
        }
        if (static_cast<int>(p.cells.size()) > max_cells) continue;
        try {
            p.validate();
        } catch (const ValidationError&) {
            continue;
        }
        return p;
    }
    throw ValidationError("no suitable random polygon found for this seed");
}

}  // namespace bundling
