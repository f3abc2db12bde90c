#include <algorithm>
#include <numeric>
#include <random>

#include "json.hpp"

#include "bundling/generate.hpp"
#include "bundling/ortho.hpp"

namespace bundling {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& js) { return js.dump(2) + "\n"; }

// Exact fraction on 128-bit integers; magnitudes stay tiny after reduction.
struct Frac {
    __int128 n = 0, d = 1;
    Frac() = default;
    Frac(long v) : n(v) {}
    Frac(__int128 num, __int128 den) : n(num), d(den) { reduce(); }
    void reduce() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
    }
    int sign() const { return n < 0 ? -1 : n > 0 ? 1 : 0; }
};

Frac operator+(const Frac& a, const Frac& b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac operator-(const Frac& a, const Frac& b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
Frac operator*(const Frac& a, const Frac& b) { return {a.n * b.n, a.d * b.d}; }
Frac operator/(const Frac& a, const Frac& b) { return {a.n * b.d, a.d * b.n}; }
bool operator<(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }
bool operator==(const Frac& a, const Frac& b) { return a.n == b.n && a.d == b.d; }

struct FPoint {
    Frac x, y;
};

Frac cross(const FPoint& a, const FPoint& b) { return a.x * b.y - a.y * b.x; }
FPoint operator-(const FPoint& a, const FPoint& b) { return {a.x - b.x, a.y - b.y}; }

// Crossing combinatorics of straight open segments given by exact endpoints.
struct Strand {
    FPoint p, q;
    Color color;
};

ordered_json strands_to_instance(const std::vector<Strand>& ss) {
    int n = static_cast<int>(ss.size());
    struct Hit {
        Frac t;
        int id;
    };
    std::vector<std::vector<Hit>> hits(n);
    ordered_json crossings = ordered_json::array();
    int next_id = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            FPoint di = ss[i].q - ss[i].p, dj = ss[j].q - ss[j].p;
            Frac den = cross(di, dj);
            FPoint w = ss[j].p - ss[i].p;
            if (den.sign() == 0) {
                if (cross(w, di).sign() != 0) continue;  // parallel, disjoint
                // collinear: reject unless the closed parameter intervals miss
                auto dot = [](const FPoint& a, const FPoint& b) { return a.x * b.x + a.y * b.y; };
                Frac len = dot(di, di);
                Frac t0 = dot(w, di) / len;
                Frac t1 = dot(ss[j].q - ss[i].p, di) / len;
                if (t1 < t0) std::swap(t0, t1);
                if (t1 < Frac(0) || Frac(1) < t0) continue;
                throw ValidationError("degenerate generator geometry");
            }
            Frac ti = cross(w, dj) / den;
            Frac tj = cross(w, di) / den;
            auto closed = [](const Frac& t) { return t.sign() >= 0 && !(Frac(1) < t); };
            auto open = [](const Frac& t) { return t.sign() > 0 && t < Frac(1); };
            if (!closed(ti) || !closed(tj)) continue;  // lines meet outside the segments
            if (!open(ti) || !open(tj)) throw ValidationError("degenerate generator geometry");
            hits[i].push_back({ti, next_id});
            hits[j].push_back({tj, next_id});
            ordered_json c;
            c["id"] = next_id;
            c["strings"] = {i, j};
            c["sign"] = den.sign();
            crossings.push_back(c);
            ++next_id;
        }
    ordered_json js;
    js["strings"] = ordered_json::array();
    for (int i = 0; i < n; ++i) {
        std::sort(hits[i].begin(), hits[i].end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
        for (size_t k = 0; k + 1 < hits[i].size(); ++k)
            if (hits[i][k].t == hits[i][k + 1].t)
                throw ValidationError("degenerate generator geometry");
        ordered_json s;
        s["id"] = i;
        s["crossings"] = ordered_json::array();
        for (const Hit& h : hits[i]) s["crossings"].push_back(h.id);
        if (ss[i].color != Color::none) s["color"] = color_name(ss[i].color);
        js["strings"].push_back(s);
    }
    js["crossings"] = crossings;
    return js;
}

ordered_json string_entry(int id, const std::vector<int>& crossings, Color c, bool closed = false) {
    ordered_json s;
    s["id"] = id;
    s["crossings"] = crossings;
    if (c != Color::none) s["color"] = color_name(c);
    if (closed) s["closed"] = true;
    return s;
}

ordered_json crossing_entry(int id, int a, int b, int sign) {
    ordered_json c;
    c["id"] = id;
    c["strings"] = {a, b};
    c["sign"] = sign;
    return c;
}

}  // namespace

std::string gen_grid(int a, int b, bool colored) {
    ordered_json js;
    js["strings"] = ordered_json::array();
    js["crossings"] = ordered_json::array();
    for (int i = 0; i < a; ++i) {
        std::vector<int> cr(b);
        std::iota(cr.begin(), cr.end(), b * i);
        js["strings"].push_back(string_entry(i, cr, colored ? Color::blue : Color::none));
    }
    for (int j = 0; j < b; ++j) {
        std::vector<int> cr(a);
        for (int i = 0; i < a; ++i) cr[i] = b * i + j;
        js["strings"].push_back(string_entry(a + j, cr, colored ? Color::red : Color::none));
    }
    for (int k = 0; k < a * b; ++k)
        js["crossings"].push_back(crossing_entry(k, k / b, a + k % b, 1));
    return dump(js);
}

std::string gen_chords(const std::vector<Chord>& chords) {
    // slot s maps to ((1-s^2), 2s) / (1+s^2): rational points on the unit
    // circle in slot order along the upper half
    auto point = [](long s) {
        return FPoint{Frac(1 - s * s, 1 + s * s), Frac(2 * s, 1 + s * s)};
    };
    std::vector<Strand> ss;
    for (const Chord& c : chords) ss.push_back({point(c.p), point(c.q), c.color});
    return dump(strands_to_instance(ss));
}

std::string gen_segments(const std::vector<Seg>& segs) {
    std::vector<Strand> ss;
    for (const Seg& s : segs)
        ss.push_back({{Frac(s.x1), Frac(s.y1)}, {Frac(s.x2), Frac(s.y2)}, s.color});
    return dump(strands_to_instance(ss));
}

std::string gen_random(int n, unsigned seed, bool bipartite) {
    for (unsigned attempt = 0; attempt < 10000; ++attempt) {
        std::mt19937 rng(seed + attempt * 0x9e3779b9u);
        std::vector<int> perm(2 * n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Chord> chords(n);
        for (int i = 0; i < n; ++i) chords[i] = {perm[2 * i], perm[2 * i + 1], Color::none};

        // crossing graph over the chords
        std::vector<std::vector<int>> adj(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto inside = [&](int s) {
                    int lo = std::min(chords[i].p, chords[i].q);
                    int hi = std::max(chords[i].p, chords[i].q);
                    return s > lo && s < hi;
                };
                if (inside(chords[j].p) != inside(chords[j].q)) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
            }
        // connected, every chord crossed, and (optionally) 2-colorable
        std::vector<int> side(n, -1);
        std::vector<int> queue{0};
        side[0] = 0;
        bool ok = true;
        for (size_t k = 0; k < queue.size() && ok; ++k)
            for (int w : adj[queue[k]]) {
                if (side[w] == -1) {
                    side[w] = side[queue[k]] ^ 1;
                    queue.push_back(w);
                } else if (bipartite && side[w] == side[queue[k]]) {
                    ok = false;
                    break;
                }
            }
        if (!ok || static_cast<int>(queue.size()) != n) continue;
        if (bipartite)
            for (int i = 0; i < n; ++i) chords[i].color = side[i] ? Color::red : Color::blue;
        try {
            return gen_chords(chords);
        } catch (const ValidationError&) {
            continue;  // concurrent chords for these slots; try other ones
        }
    }
    throw ValidationError("no suitable random instance found for this seed");
}

std::string gen_toothed(int k, bool colored) {
    if (k < 0) throw ValidationError("invalid generator size");
    Color blue = colored ? Color::blue : Color::none;
    Color red = colored ? Color::red : Color::none;
    std::vector<Seg> segs;
    segs.push_back({-2, 20, 6 * k + 8, 20, red});  // top
    segs.push_back({-2, 0, 6 * k + 8, 0, red});    // bottom
    for (int i = 0; i <= k; ++i) segs.push_back({6 * i + 3, -4, 6 * i + 3, 24, blue});
    // tooth i ends inside the pocket between rungs i-1 and i
    for (int i = 1; i <= k; ++i) segs.push_back({6 * i, 26, 6 * i, 10, blue});
    return gen_segments(segs);
}

std::string gen_bilaminar(unsigned seed) {
    OrthoPolygon p = gen_ortho(seed);
    std::vector<Seg> segs;
    int xmin = 1 << 30, xmax = -(1 << 30), ymin = 1 << 30, ymax = -(1 << 30);
    for (auto [x, y] : p.cells) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    // one string per maximal run of cells; crossings land on the cells
    for (int x = xmin; x <= xmax; ++x)
        for (int y = ymin; y <= ymax + 1; ++y) {
            if (!p.cell(x, y) || p.cell(x, y - 1)) continue;
            int y2 = y;
            while (p.cell(x, y2 + 1)) ++y2;
            segs.push_back({2 * x + 1, 2 * y, 2 * x + 1, 2 * y2 + 2, Color::blue});
        }
    for (int y = ymin; y <= ymax; ++y)
        for (int x = xmin; x <= xmax + 1; ++x) {
            if (!p.cell(x, y) || p.cell(x - 1, y)) continue;
            int x2 = x;
            while (p.cell(x2 + 1, y)) ++x2;
            segs.push_back({2 * x, 2 * y + 1, 2 * x2 + 2, 2 * y + 1, Color::red});
        }
    return gen_segments(segs);
}

std::string gen_c4xc4() { return gen_grid(4, 4, false); }

std::string gen_ring() {
    ordered_json js;
    js["strings"] = {string_entry(0, {0, 1, 2, 3}, Color::none, true),
                     string_entry(1, {0, 1, 2, 3}, Color::none, true)};
    js["crossings"] = {crossing_entry(0, 0, 1, 1), crossing_entry(1, 0, 1, -1),
                       crossing_entry(2, 0, 1, 1), crossing_entry(3, 0, 1, -1)};
    return dump(js);
}

std::string gen_loop() {
    ordered_json js;
    js["strings"] = {string_entry(0, {0, 1, 2, 0, 1, 2}, Color::none, true)};
    js["crossings"] = {crossing_entry(0, 0, 0, -1), crossing_entry(1, 0, 0, 1),
                       crossing_entry(2, 0, 0, -1)};
    return dump(js);
}

}  // namespace bundling
