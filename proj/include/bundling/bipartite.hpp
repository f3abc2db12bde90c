#ifndef BUNDLING_BIPARTITE_HPP
#define BUNDLING_BIPARTITE_HPP

#include <utility>
#include <vector>

#include "bundling/rectangulation.hpp"

namespace bundling {

/// Colored net where blue and red alternate around every square.
bool is_bipartite(const DualNet& n);

enum class VertexClass { weak, strong };

/// Relative to a chosen color c: a positive-exponent vertex is weak when its
/// degree is odd, it lies on the border, and all its border edges carry the
/// other color; otherwise it is strong.
struct WeakStrongTable {
    std::vector<int> cls;  // per net vertex: -1 zero-exponent, 0 weak, 1 strong
};
WeakStrongTable classify_weak_strong(const DualNet& n, Color c);

/// All maximal straight paths of color-c edges; each connects two holes.
std::vector<Segment> color_segments(const DualNet& n, Color c);

struct GainValue {
    int g = 0;
    int exp_drop = 0;  // sum of exp(v) - exp_S(v)
    int size = 0;      // |S|
};

/// Marginal gain by definition: sum of exponent drops minus |S|.
GainValue gain_def(const DualNet& n, const std::vector<Segment>& s);

/// Multigraph on the positive-exponent vertices: one edge per color-c
/// segment (joining its end vertices), one loop per strong vertex. Segment
/// ends of exponent zero become private auxiliary leaves.
struct GainGraph {
    Color color = Color::blue;
    std::vector<int> vert_net;               // gain vertex -> net vertex
    std::vector<int> net_vert;               // net vertex -> gain vertex, -1 otherwise
    std::vector<bool> strong_v;              // per gain vertex
    std::vector<std::pair<int, int>> edges;  // segment edges first, then loops
    std::vector<Segment> segments;           // aligned with the segment-edge prefix
    int n_b = 0;                             // edges [0, n_b) come from segments

    int num_loops() const { return static_cast<int>(edges.size()) - n_b; }
};
GainGraph build_gain_graph(const DualNet& n, Color c);

/// Closed formula |S^| - |V(S)| - tc(S^) over the gain graph, where S^ adds
/// the loops at strong vertices touched by S and tc counts tree components.
GainValue gain_formula(const GainGraph& gb, const std::vector<int>& s);

/// Bicircular rank |V(S)| - tc(S) and nullity |S| - rank, for any edge set.
std::pair<int, int> bicircular_nullity(const GainGraph& gb, const std::vector<int>& s);

/// The unique gain maximizer: prune leaf edges to a fixed point, then drop
/// cycle components; returns the surviving segment-edge indices.
std::vector<int> max_gain_set(const GainGraph& gb);

struct BipartiteResult {
    Color color = Color::blue;  // the color whose maximizer won
    GainValue gain;             // g(A)
    int seed_size = 0;          // |A|
    CutSet cutset;
    Rectangulation rect;
};

/// Seed the greedy strategy with the better of the two monochromatic gain
/// maximizers, then extract the rectangulation.
BipartiteResult bipartite_pipeline(const DualNet& n);

struct SplitGains {
    GainValue blue, red, whole;
    bool ok = false;  // g(S_B) + g(S_R) >= g(S)
};

/// Blue-red split inequality for a saturating cut-set.
SplitGains split_gain_check(const DualNet& n, const CutSet& s);

}  // namespace bundling

#endif
