#ifndef BUNDLING_RECTANGULATION_HPP
#define BUNDLING_RECTANGULATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bundling/net.hpp"

namespace bundling {

struct SegmentEnd {
    enum Kind { at_hole, at_border, at_segment } kind = at_segment;
    int vertex = -1;
};

/// A straight path in the net: consecutive edges are rotation-opposite at
/// their common (regular) vertex.
struct Segment {
    std::vector<int> edges;     // net edge ids in path order
    std::vector<int> vertices;  // path vertices, edges.size() + 1 of them
    SegmentEnd front, back;
};

struct CutSet {
    std::vector<Segment> segments;
    std::vector<bool> covered;            // per net edge
    std::vector<int> seg_of_edge;         // per net edge, -1 when uncovered
    std::vector<bool> interior_vertex;    // true when some segment passes through

    CutSet() = default;  // empty shell, only for delayed assignment
    explicit CutSet(const DualNet& n)
        : covered(n.E(), false), seg_of_edge(n.E(), -1), interior_vertex(n.V(), false) {}
    int size() const { return static_cast<int>(segments.size()); }
    void add(const Segment& s);
};

bool is_saturating(const DualNet& n, const CutSet& s);

/// Maximal straight path starting at v along edge e, extended through
/// regular vertices via the rotation-opposite edge; stops at non-regular
/// vertices, at interior vertices of existing segments, and before edges
/// already covered.
Segment shoot_segment(const DualNet& n, int v, int e, const CutSet& s);

/// The greedy strategy: saturate positive-exponent vertices in order
/// (ascending vertex id unless an explicit order is given), shooting a
/// minimal set of segments per vertex. A safety pass re-checks every vertex.
CutSet greedy_rectangulate(const DualNet& n, const CutSet* seed = nullptr,
                           const std::vector<int>* order = nullptr);

/// Holes are indexed vertex-holes first (ascending vertex id), then
/// boundary-holes (ascending face id).
struct HoleIndex {
    std::vector<int> vertex_holes;  // hole idx -> net vertex
    std::vector<int> face_holes;    // hole idx - #vertex_holes -> net face
    int count() const { return static_cast<int>(vertex_holes.size() + face_holes.size()); }
};
HoleIndex index_holes(const DualNet& n);

struct Rectangulation {
    CutSet cutset;
    std::vector<int> rect_of_square;             // crossing index -> rectangle id
    std::vector<std::vector<int>> rect_squares;  // rectangle -> net face ids
    std::vector<std::pair<int, int>> rect_dims;  // rectangle -> (a, b) grid extent
    int R = 0, S = 0, H = 0;
    std::vector<int> hole_segments;  // per hole (HoleIndex order): #incident segments

    /// Minimum number of segments incident to any hole.
    int min_hole_segments() const;
};

/// Faces of border ∪ cut-set become the rectangles; each is verified by an
/// explicit grid labeling. Throws when s is not saturating, or (internal)
/// when a face fails the labeling.
Rectangulation extract_rectangulation(const DualNet& n, const CutSet& s);

/// The canonical cut-set delimiting a given partition of the squares into
/// rectangles: covers exactly the separating edges; where all four edges at
/// a regular vertex separate, the through-pair is the one holding the
/// lowest edge id. An entry in `through` (vertex -> edge id) overrides the
/// through-pair choice at that vertex.
CutSet delimiting_cutset(const DualNet& n, const std::vector<int>& rect_of_square,
                         const std::map<int, int>* through = nullptr);

/// Regular vertices whose four incident edges all separate rectangles of the
/// partition: the vertices where the delimiting cut-set is ambiguous.
std::vector<int> ambiguous_vertices(const DualNet& n, const std::vector<int>& rect_of_square);

/// Grid extent of a square set when it forms a rectangle (cutting along
/// every edge leaving the set), empty otherwise.
std::optional<std::pair<int, int>> rectangle_dims(const DualNet& n, const std::vector<int>& faces);

/// Cubic plane verification graph: one monochromatic path per segment,
/// faces in bijection with rectangles and holes.
struct GammaGraph {
    bool degenerate = false;  // S = 0: no splits happen, graph left empty
    int num_vertices = 0;
    std::vector<int> origin, next_rot;           // half-edge map, twin = h^1
    std::vector<int> edge_segment;               // per edge: segment id or -1 (border piece)
    std::vector<std::vector<int>> faces;         // traced walks
    std::vector<int> face_tag;                   // rectangle id, or R + hole idx
    int R = 0, H = 0, S = 0;
    int min_hole_segments = -1;  // carried over for the simplicity criterion

    int num_edges() const { return static_cast<int>(origin.size()) / 2; }
    int num_faces() const { return static_cast<int>(faces.size()); }
};

GammaGraph build_gamma(const DualNet& n, const Rectangulation& r);

struct GammaReport {
    bool cubic = false, counts_ok = false, dual_triangulated = false, holes_independent = false;
    // A hole with fewer than three segment incidences forces multiedges or
    // loops; the converse fails (a rectangle bounded by one uncrossed
    // segment and a hole stretch is a 2-gon), so only that direction counts.
    bool simple = false, simple_expected = false;
    std::vector<std::string> notes;
    bool ok() const {
        return cubic && counts_ok && dual_triangulated && holes_independent &&
               (!simple || simple_expected);
    }
};

GammaReport gamma_checks(const GammaGraph& g);

struct Bundling {
    std::vector<std::vector<int>> bundles;  // crossing ids per bundle
    int R = 0, S = 0, H = 0, t = 0;
};

/// Rectangles to bundles of crossing ids; every bundle re-verified to form
/// a grid pattern.
Bundling to_bundling(const DualNet& n, const Rectangulation& r);

std::string bundling_to_json(const Bundling& b);

}  // namespace bundling

#endif
