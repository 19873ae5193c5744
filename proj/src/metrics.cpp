#include "arrgraph/metrics.hpp"

#include <algorithm>
#include <deque>

namespace arrgraph {

EccentricityReport all_distances(const ArrangementGraph& g) {
    const int m = static_cast<int>(g.vertices.size());
    EccentricityReport r;
    r.dist.assign(m, std::vector<int>(m, -1));
    for (int s = 0; s < m; ++s) {
        auto& d = r.dist[s];
        d[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.adj[v])
                if (d[u] < 0) {
                    d[u] = d[v] + 1;
                    q.push_back(u);
                }
        }
    }
    r.ecc.resize(m);
    for (int v = 0; v < m; ++v)
        r.ecc[v] = *std::max_element(r.dist[v].begin(), r.dist[v].end());
    r.diameter = *std::max_element(r.ecc.begin(), r.ecc.end());
    r.radius = *std::min_element(r.ecc.begin(), r.ecc.end());
    for (int v = 0; v < m; ++v) {
        if (r.ecc[v] == r.diameter) r.diametrical.push_back(v);
        if (r.ecc[v] == r.radius) r.central.push_back(v);
    }
    return r;
}

std::vector<int> eccentric_vertices_of(const EccentricityReport& r, int v) {
    std::vector<int> out;
    for (size_t u = 0; u < r.dist[v].size(); ++u)
        if (r.dist[v][u] == r.ecc[v]) out.push_back(static_cast<int>(u));
    return out;
}

std::vector<int> diametrical_vertices(const EccentricityReport& r) { return r.diametrical; }

int side_of_line(const ArrangementGraph& g, int v, int slot) { return g.side[v][slot]; }

int separating_line_count(const ArrangementGraph& g, int u, int v) {
    int c = 0;
    for (int s = 0; s < g.n; ++s)
        if (g.side[u][s] * g.side[v][s] == -1) ++c;
    return c;
}

namespace {

void collect_paths(const ArrangementGraph& g, const std::vector<int>& dist_from_u, int x,
                   std::vector<int>& partial, std::vector<std::vector<int>>& out, long cap) {
    partial.push_back(x);
    if (dist_from_u[x] == 0) {
        if (static_cast<long>(out.size()) >= cap)
            throw path_cap_exceeded("all_shortest_paths: more than " + std::to_string(cap) +
                                    " paths");
        out.emplace_back(partial.rbegin(), partial.rend());
    } else {
        for (int w : g.adj[x])
            if (dist_from_u[w] == dist_from_u[x] - 1)
                collect_paths(g, dist_from_u, w, partial, out, cap);
    }
    partial.pop_back();
}

} // namespace

std::vector<std::vector<int>> all_shortest_paths(const ArrangementGraph& g, int u, int v,
                                                 long cap) {
    const int m = static_cast<int>(g.vertices.size());
    std::vector<int> d(m, -1);
    d[u] = 0;
    std::deque<int> q{u};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int w : g.adj[x])
            if (d[w] < 0) {
                d[w] = d[x] + 1;
                q.push_back(w);
            }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> partial;
    collect_paths(g, d, v, partial, out, cap);
    return out;
}

Pseudoquadrant quadrant_of(const ArrangementGraph& g, int w, int target) {
    Pseudoquadrant q;
    q.w = w;
    q.slot1 = g.slot_of(g.vertices[w].l1);
    q.slot2 = g.slot_of(g.vertices[w].l2);
    q.s1 = g.side[target][q.slot1];
    q.s2 = g.side[target][q.slot2];
    q.boundary = (q.s1 == 0 || q.s2 == 0);
    return q;
}

bool quadrant_contains(const ArrangementGraph& g, const Pseudoquadrant& q, int x) {
    int x1 = g.side[x][q.slot1], x2 = g.side[x][q.slot2];
    bool ok1 = (q.s1 == 0) ? (x1 == 0) : (x1 == 0 || x1 == q.s1);
    bool ok2 = (q.s2 == 0) ? (x2 == 0) : (x2 == 0 || x2 == q.s2);
    return ok1 && ok2;
}

} // namespace arrgraph
