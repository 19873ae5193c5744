#pragma once

#include "arrgraph/graph.hpp"

#include <optional>
#include <vector>

namespace arrgraph {

struct EccentricityReport {
    std::vector<std::vector<int>> dist; // hop counts, dist[u][v]
    std::vector<int> ecc;
    int diameter = 0;
    int radius = 0;
    std::vector<int> diametrical; // ecc == diameter, sorted
    std::vector<int> central;     // ecc == radius, sorted
};

EccentricityReport all_distances(const ArrangementGraph& g);

std::vector<int> eccentric_vertices_of(const EccentricityReport& r, int v);
std::vector<int> diametrical_vertices(const EccentricityReport& r);

// Side of vertex v relative to the line in the given slot: -1/0/+1, 0 iff v
// lies on the line.  Uniform over both graph representations.
int side_of_line(const ArrangementGraph& g, int v, int slot);

// Number of lines with u and v strictly on opposite sides.
int separating_line_count(const ArrangementGraph& g, int u, int v);

struct path_cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All shortest u-v paths as vertex index sequences, deterministic order.
std::vector<std::vector<int>> all_shortest_paths(const ArrangementGraph& g, int u, int v,
                                                 long cap = 1000000);

// Closed pseudoquadrant at w containing the target: the signs of the target
// relative to w's two lines.  boundary is set when the target lies on one of
// them (sign 0 there).
struct Pseudoquadrant {
    int w = -1;
    int slot1 = -1, slot2 = -1; // slots of w's lines, slot1 < slot2
    int s1 = 0, s2 = 0;
    bool boundary = false;
};

Pseudoquadrant quadrant_of(const ArrangementGraph& g, int w, int target);

// Membership in the closed quadrant (signs may be 0 or match).
bool quadrant_contains(const ArrangementGraph& g, const Pseudoquadrant& q, int x);

} // namespace arrgraph
