#ifndef BUNDLING_NET_HPP
#define BUNDLING_NET_HPP

#include <string>
#include <vector>

#include "bundling/planarization.hpp"

namespace bundling {

enum class VertexKind { regular, border, vertex_hole };
enum class FaceKind { square, boundary_hole };

/// Restricted planar dual of a grounded arrangement: one vertex per cell
/// (curve interiors excluded), one edge per string arc. Net half-edges reuse
/// the primal string half-edge ids; the net half h has origin at the cell to
/// the left of the primal h. Net faces are squares (one per crossing) and
/// boundary-holes (one per curve).
struct DualNet {
    GroundedArrangement g;
    PlaneMap net;

    std::vector<int> cell_face;   // net vertex -> grounded face id
    std::vector<int> face_cell;   // grounded face id -> net vertex, -1 for curve interiors

    std::vector<FaceKind> face_kind;  // per net face
    std::vector<int> face_tag;        // crossing index (square) or curve id (hole)
    std::vector<int> square_face;     // crossing index -> net face id

    std::vector<bool> border_edge;  // per net edge (dual of an end-arc)
    std::vector<VertexKind> vkind;
    std::vector<int> degree;
    std::vector<int> first_half;  // net vertex -> some half with that origin, -1 if isolated

    std::vector<int> exponent;  // per net vertex, minimum saturating edge count
    int exp_total = 0;

    int n_squares = 0;
    int n_boundary_holes = 0;
    int n_vertex_holes = 0;
    int H = 0;      // vertex-holes + boundary-holes
    int H_odd = 0;  // odd-degree vertex-holes

    int V() const { return net.num_vertices; }
    int E() const { return net.num_arcs(); }
    int F() const { return static_cast<int>(net.faces.size()); }

    bool is_square(int face) const { return face_kind[face] == FaceKind::square; }
    Color edge_color(int e) const { return g.plan.arc_color(e); }
    bool is_colored() const { return g.plan.arr.is_colored(); }

    /// Half-edges at v in rotation order, starting from first_half[v].
    std::vector<int> rotation(int v) const;

    /// The face filling the angular sector between h and its rotation
    /// successor at origin(h).
    int sector_face(int h) const { return net.face_of[net.next_rot[h]]; }
};

DualNet build_net(const GroundedArrangement& g);

/// True when the edges of E0 together with the border saturate v: every
/// angle they induce at v sees at most two squares (a regular vertex with no
/// incident E0 edge is saturated by definition).
bool saturates(const DualNet& n, const std::vector<bool>& covered, int v);

/// Minimum number of extra edges at v needed to saturate it given that the
/// edges marked in `covered` (plus the border) are already selected.
int relative_exponent(const DualNet& n, const std::vector<bool>& covered, int v);

/// Toothed-hole count t(N): boundary-holes whose vertex degrees are either
/// one 7 and the rest 3, or two 5s and the rest 3.
int detect_toothed_holes(const DualNet& n);

struct PatternReport {
    std::vector<std::string> findings;  // square-ring / square-loop / impossible holes
    bool ok() const { return findings.empty(); }
};

/// Configurations impossible in nets of pseudosegments: square-rings,
/// square-loops, degree-1/2 vertex-holes, and boundary-holes whose degrees
/// are all 3 or one 5 and the rest 3.
PatternReport detect_forbidden_patterns(const DualNet& n);

/// Stable textual dump: vertices with tags, edges with colors, faces with tags.
std::string dump_net(const DualNet& n);

}  // namespace bundling

#endif
