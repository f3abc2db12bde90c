#ifndef BUNDLING_GENERATE_HPP
#define BUNDLING_GENERATE_HPP

#include <string>
#include <vector>

#include "bundling/arrangement.hpp"

namespace bundling {

/// a horizontal times b vertical strings; rows blue, columns red when
/// colored. Crossing k = b*i + j.
std::string gen_grid(int a, int b, bool colored = false);

struct Chord {
    int p = 0, q = 0;  // endpoint slots on the circle (distinct over all chords)
    Color color = Color::none;
};

/// Straight chords of a circle: crossings, their order along each chord, and
/// the rotation signs are derived with exact rational arithmetic (slots map
/// to rational points on the unit circle).
std::string gen_chords(const std::vector<Chord>& chords);

struct Seg {
    long x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // integer endpoints
    Color color = Color::none;
};

/// Straight open segments in the plane, combinatorics derived with exact
/// integer arithmetic; rejects degenerate contacts (shared endpoints,
/// collinear overlaps, touching).
std::string gen_segments(const std::vector<Seg>& segs);

/// n random chords over 2n slots; retries derived seeds until the instance
/// is connected with every chord crossed. With bipartite=true the crossing
/// graph is additionally required to be 2-colorable, and colors are assigned.
std::string gen_random(int n, unsigned seed, bool bipartite = false);

/// A ladder of k+1 rungs between two horizontal strings, plus k teeth each
/// poking through the top string into its own pocket: toothed holes grow
/// with k while the optimum stays at two rectangles.
std::string gen_toothed(int k, bool colored = false);

/// A bipartite instance drawn as vertical and horizontal chords of a random
/// orthogonal polygon: one string per maximal run of cells, crossings at the
/// cells.
std::string gen_bilaminar(unsigned seed);

/// The sixteen-crossing grid drawing whose crossings form a single bundle.
std::string gen_c4xc4();

/// Two closed curves crossing four times: a square-ring.
std::string gen_ring();

/// One self-crossing closed curve: a square-loop.
std::string gen_loop();

}  // namespace bundling

#endif
