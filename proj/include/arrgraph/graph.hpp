#pragma once

#include "arrgraph/geometry.hpp"
#include "arrgraph/wiring.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace arrgraph {

// Plane graph of a simple arrangement: vertices are crossings labeled by the
// pair of lines meeting there, edges join consecutive crossings along a line.
// Carries an exact embedding (coords + per-edge polylines), the rotation
// system, per-vertex side signs for every line, and the cyclic order of the
// 2n unbounded rays, so both wiring-built and geometry-built graphs support
// the same face and sweep machinery.
struct ArrangementGraph {
    int n = 0;
    std::vector<int> line_ids; // sorted; slot k holds line_ids[k]

    struct Vertex {
        int l1 = 0, l2 = 0; // line ids, l1 < l2
        bool operator==(const Vertex&) const = default;
    };

    std::vector<Vertex> vertices; // n(n-1)/2 of them
    std::vector<std::vector<int>> adj; // neighbor vertex indices, sorted
    std::vector<std::vector<int>> line_orders; // per slot, vertex indices along the line
    std::vector<RationalPoint> coords;
    // rotation[v] lists neighbors of v in counterclockwise order
    std::vector<std::vector<int>> rotation;
    // polyline[v][k] = support points of the edge toward rotation[v][k],
    // starting at coords[v] and ending at the neighbor's coords
    std::vector<std::vector<std::vector<RationalPoint>>> polylines;
    // side[v][slot] in {-1,0,+1}; 0 iff the vertex lies on that line
    std::vector<std::vector<int>> side;
    // counterclockwise cyclic order of the unbounded rays (slot, head?);
    // tail = start of line_orders[slot], head = end
    std::vector<std::pair<int, bool>> infinity_cycle;

    int slot_of(int line_id) const;
    int vertex_index(int la, int lb) const; // -1 if absent
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::string vertex_label(int v) const;  // "la,lb"
    bool crossing_extreme_on(int v, int slot) const;
};

ArrangementGraph build_from_wiring(const WiringDiagram& d);     // rejects invalid d
ArrangementGraph build_from_arrangement(const LineArrangement& A); // rejects non-simple A

struct FaceStructure {
    // each face as a closed walk of vertex indices (darts in traversal order,
    // face interior on the left); walk[i] -> walk[i+1] is a dart
    std::vector<std::vector<int>> walks;
    std::vector<Rational> areas; // signed; negative only for the outer face
    int outer = -1;
};

FaceStructure faces(const ArrangementGraph& g);

std::vector<int> outer_face_vertices(const ArrangementGraph& g); // sorted

// Vertices on the outer face of the sub-arrangement left after deleting the
// outer face vertices (and their edges).  Isolated leftovers count.
std::vector<int> one_layer_vertices(const ArrangementGraph& g); // sorted

std::vector<int> degree_sequence_of(const ArrangementGraph& g); // sorted descending

// Plain labeled graph for isomorphism tests and 2-switches.
struct AbstractGraph {
    int n = 0;
    std::vector<std::set<int>> adj;

    static AbstractGraph from(const ArrangementGraph& g);
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    std::vector<int> degree_sequence() const; // sorted descending
    bool operator==(const AbstractGraph&) const = default;
};

// Exact search with degree pruning; both graphs must have <= 21 vertices.
bool is_isomorphic(const AbstractGraph& a, const AbstractGraph& b);

// Removes edges xy and zw, adds yz and wx.  pre: xy, zw present and disjoint
// on four distinct vertices; yz, wx absent.  Degree-preserving.
AbstractGraph two_switch(const AbstractGraph& g, std::pair<int, int> xy, std::pair<int, int> zw);

// Sweeps a simple arrangement with a generic direction (1, q) and returns the
// wiring diagram; wire k is the line with the k-th lowest starting level, and
// the mapping is reported via wire_to_line_id.
struct ArrangementSweep {
    WiringDiagram diagram;
    std::vector<int> wire_to_line_id; // index 0 = wire 1
};

ArrangementSweep sweep_arrangement(const LineArrangement& A);

} // namespace arrgraph
