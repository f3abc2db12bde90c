#ifndef BUNDLING_ORTHO_HPP
#define BUNDLING_ORTHO_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bundling/arrangement.hpp"

namespace bundling {

using Cell = std::pair<int, int>;
using Point = std::pair<int, int>;

/// Simply connected orthogonal polygon given as a set of unit cells.
struct OrthoPolygon {
    std::set<Cell> cells;

    /// Throws unless the cell set is nonempty, connected, free of pinch
    /// points, and has no interior holes.
    void validate() const;

    /// Lattice points where exactly three surrounding cells are present,
    /// each with the direction of the missing quadrant.
    std::vector<std::pair<Point, Cell>> concave_corners() const;

    bool cell(int x, int y) const { return cells.count({x, y}) != 0; }
    /// 0..4 surrounding cells of a lattice point.
    int point_cells(Point p) const;
};

/// An axis-parallel cut with lattice endpoints; covered points listed
/// inclusively.
struct OrthoSegment {
    Point a, b;  // a < b, sharing one coordinate
    bool horizontal() const { return a.second == b.second; }
    std::vector<Point> points() const;
};

struct OrthoResult {
    std::vector<OrthoSegment> segments;
    int S = 0, R = 0;
};

/// Exact minimum rectangulation: maximum independent set of good segments
/// in the bipartite conflict graph (via maximum matching), then one shot per
/// uncovered concave corner. Guarantees R = S + 1.
OrthoResult ortho_exact(const OrthoPolygon& p);

/// The greedy strategy: walk the concave corners in order and shoot from
/// every corner not yet incident to a segment (horizontal shots preferred).
OrthoResult ortho_greedy(const OrthoPolygon& p);

/// Cell-level exhaustive minimum over all rectangle partitions of the cells.
int ortho_brute_force_rects(const OrthoPolygon& p);

/// Good segments: axis-parallel chords joining two concave corners in their
/// resolving directions, running through the interior.
std::vector<OrthoSegment> good_segments(const OrthoPolygon& p);

/// Deterministic random simply connected polygon with at most max_cells
/// cells, built by unioning overlapping rectangles.
OrthoPolygon gen_ortho(unsigned seed, int max_cells = 40);

}  // namespace bundling

#endif
