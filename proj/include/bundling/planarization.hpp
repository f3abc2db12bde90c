#ifndef BUNDLING_PLANARIZATION_HPP
#define BUNDLING_PLANARIZATION_HPP

#include <string>
#include <vector>

#include "bundling/arrangement.hpp"

namespace bundling {

/// Combinatorial map on the sphere. Arc a owns half-edges 2a (tail->head)
/// and 2a+1; rotations are counterclockwise around each vertex. Faces are
/// the orbits of h -> next_rot[twin(h)] and lie to the left of their
/// half-edges.
struct PlaneMap {
    int num_vertices = 0;
    std::vector<int> next_rot;             // per half-edge
    std::vector<int> origin;               // per half-edge
    std::vector<int> face_of;              // per half-edge, set by trace_faces
    std::vector<std::vector<int>> faces;   // face walks (half-edge lists)

    int num_arcs() const { return static_cast<int>(origin.size()) / 2; }
    int num_halves() const { return static_cast<int>(origin.size()); }
    static int twin(int h) { return h ^ 1; }
    int head(int h) const { return origin[twin(h)]; }

    void trace_faces();
    std::vector<int> rotation_at(int v) const;  // CCW half-edge list
    std::vector<int> degree_table() const;
};

/// The drawing with crossings replaced by degree-4 vertices. Vertices
/// [0, n_crossings) are crossings (indexed as in the arrangement); the
/// rest are string endpoints.
struct Planarization {
    Arrangement arr;
    PlaneMap map;
    int n_crossings = 0;
    int n_endpoints = 0;
    std::vector<int> arc_string;                      // arc -> string index
    std::vector<std::pair<int, int>> endpoint_owner;  // endpoint -> (string index, end 0/1)

    int V() const { return map.num_vertices; }
    int E() const { return map.num_arcs(); }
    int F() const { return static_cast<int>(map.faces.size()); }
    bool is_endpoint(int v) const { return v >= n_crossings; }
    Color arc_color(int arc) const { return arr.strings[arc_string[arc]].color; }
};

Planarization build_planarization(const Arrangement& arr);

struct ValidationReport {
    struct Violation {
        char kind;  // 'a' self-crossing, 'b' double crossing (lens), 'c' closed string
        std::string detail;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the pseudosegment conditions that are visible at the arrangement
/// level. Square-ring / square-loop patterns are detected on the net.
ValidationReport validate_pseudosegments(const Planarization& p);

/// Planarization plus one boundary curve per face containing endpoints.
/// String arcs keep their ids; boundary arcs follow.
struct GroundedArrangement {
    Planarization plan;                  // the ungrounded planarization
    PlaneMap map;                        // grounded map
    int n_string_arcs = 0;               // arcs below this id are string arcs
    int n_curves = 0;
    std::vector<int> arc_curve;          // arc -> curve id, -1 for string arcs
    std::vector<int> hole_cell;          // curve -> face id of the curve interior
    std::vector<int> endpoint_curve;     // endpoint vertex -> curve id
    std::vector<std::vector<int>> curve_endpoints;  // curve -> endpoints in cyclic order

    bool is_string_arc(int arc) const { return arc < n_string_arcs; }
    bool is_end_arc(int arc) const;  // string arc incident with an endpoint
};

GroundedArrangement ground(const Planarization& p);

}  // namespace bundling

#endif
