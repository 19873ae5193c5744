#include <doctest.h>

#include "arrgraph/metrics.hpp"

#include <algorithm>
#include <vector>

using namespace arrgraph;

namespace {

WiringDiagram wd(int n, std::vector<int> s) { return WiringDiagram{n, std::move(s)}; }

// staircase diagram on 4 wires; crossings in swap order:
// v0=(1,2) v1=(1,3) v2=(2,3) v3=(1,4) v4=(2,4) v5=(3,4)
ArrangementGraph quad() { return build_from_wiring(wd(4, {1, 2, 1, 3, 2, 1})); }

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("triangle distances") {
    ArrangementGraph g = build_from_wiring(wd(3, {1, 2, 1}));
    EccentricityReport r = all_distances(g);
    CHECK(r.diameter == 1);
    CHECK(r.radius == 1);
    CHECK(r.diametrical == std::vector<int>{0, 1, 2});
    CHECK(r.central == std::vector<int>{0, 1, 2});
    CHECK(eccentric_vertices_of(r, 0) == std::vector<int>{1, 2});
    CHECK(r.dist[1][2] == 1);
    CHECK(r.dist[2][2] == 0);
}

TEST_CASE("four line distances") {
    ArrangementGraph g = quad();
    EccentricityReport r = all_distances(g);
    CHECK(r.diameter == 2);
    CHECK(r.radius == 2);
    CHECK(r.ecc == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(r.dist[0][3] == 2);
    CHECK(r.dist[0][5] == 2);
    CHECK(r.dist[2][3] == 2);
    for (int v = 0; v < 6; ++v) CHECK(r.dist[v] == [&] {
        std::vector<int> col(6);
        for (int u = 0; u < 6; ++u) col[u] = r.dist[u][v];
        return col;
    }());
}

TEST_CASE("shortest path listing") {
    ArrangementGraph g = quad();

    // co-linear pair (1,2)-(1,4) along line 1: one path, the line itself
    auto paths = all_shortest_paths(g, 0, 3);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == std::vector<int>{0, 1, 3});

    // (1,4)-(2,3) has two routes
    paths = all_shortest_paths(g, 3, 2);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0] == std::vector<int>{3, 1, 2});
    CHECK(paths[1] == std::vector<int>{3, 4, 2});

    // endpoints and neighbors
    paths = all_shortest_paths(g, 4, 4);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == std::vector<int>{4});
    paths = all_shortest_paths(g, 0, 1);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0] == std::vector<int>{0, 1});
}

TEST_CASE("path cap throws instead of flooding") {
    ArrangementGraph g = quad();
    CHECK_THROWS_AS((void)all_shortest_paths(g, 3, 2, 1), path_cap_exceeded);
    CHECK_NOTHROW((void)all_shortest_paths(g, 3, 2, 2));
}

TEST_CASE("separating line counts") {
    ArrangementGraph g = quad();
    // line 3 crosses line 1 between (1,2) and (1,4)
    CHECK(separating_line_count(g, 0, 3) == 1);
    CHECK(separating_line_count(g, 3, 0) == 1);
    // no line fits strictly between a vertex pair that covers all four lines
    CHECK(separating_line_count(g, 0, 5) == 0);
    CHECK(separating_line_count(g, 0, 1) == 0);
    CHECK(separating_line_count(g, 0, 0) == 0);
}

TEST_CASE("side signs line up with incidence") {
    ArrangementGraph g = quad();
    CHECK(side_of_line(g, 0, g.slot_of(1)) == 0);
    CHECK(side_of_line(g, 0, g.slot_of(2)) == 0);
    CHECK(side_of_line(g, 0, g.slot_of(3)) != 0);
    // (1,2) and (1,4) sit on opposite sides of line 3
    CHECK(side_of_line(g, 0, g.slot_of(3)) == -side_of_line(g, 3, g.slot_of(3)));
}

TEST_CASE("pseudoquadrants around a 4-vertex") {
    ArrangementGraph g = quad();
    // w = (2,3), target = (1,4): a full quadrant
    Pseudoquadrant q = quadrant_of(g, 2, 3);
    CHECK(q.w == 2);
    CHECK_FALSE(q.boundary);
    CHECK(quadrant_contains(g, q, 3));
    CHECK(quadrant_contains(g, q, 1)); // on line 3, closed side
    CHECK(quadrant_contains(g, q, 4));
    CHECK_FALSE(quadrant_contains(g, q, 0));

    // co-linear target degenerates to the shared line
    Pseudoquadrant b = quadrant_of(g, 2, 0);
    CHECK(b.boundary);
    CHECK(quadrant_contains(g, b, 0));
    CHECK_FALSE(quadrant_contains(g, b, 1));
    CHECK_FALSE(quadrant_contains(g, b, 4)); // on line 2 but past the crossing
}

TEST_CASE("shortest paths stay inside the quadrant of their endpoints") {
    ArrangementGraph g = build_from_wiring(wd(5, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}));
    const int m = static_cast<int>(g.vertices.size());
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            bool colinear = g.vertices[u].l1 == g.vertices[v].l1 ||
                            g.vertices[u].l1 == g.vertices[v].l2 ||
                            g.vertices[u].l2 == g.vertices[v].l1 ||
                            g.vertices[u].l2 == g.vertices[v].l2;
            if (colinear) continue;
            Pseudoquadrant qu = quadrant_of(g, u, v);
            Pseudoquadrant qv = quadrant_of(g, v, u);
            for (const auto& path : all_shortest_paths(g, u, v))
                for (int x : path) {
                    CHECK(quadrant_contains(g, qu, x));
                    CHECK(quadrant_contains(g, qv, x));
                }
        }
}

} // TEST_SUITE
