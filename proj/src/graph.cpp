#include "arrgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace arrgraph {

int ArrangementGraph::slot_of(int line_id) const {
    auto it = std::lower_bound(line_ids.begin(), line_ids.end(), line_id);
    if (it == line_ids.end() || *it != line_id)
        throw std::invalid_argument("unknown line id " + std::to_string(line_id));
    return static_cast<int>(it - line_ids.begin());
}

int ArrangementGraph::vertex_index(int la, int lb) const {
    if (la > lb) std::swap(la, lb);
    for (size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v].l1 == la && vertices[v].l2 == lb) return static_cast<int>(v);
    return -1;
}

std::string ArrangementGraph::vertex_label(int v) const {
    return std::to_string(vertices[v].l1) + "," + std::to_string(vertices[v].l2);
}

bool ArrangementGraph::crossing_extreme_on(int v, int slot) const {
    const auto& ord = line_orders[slot];
    return !ord.empty() && (ord.front() == v || ord.back() == v);
}

namespace {

void finish_adjacency(ArrangementGraph& g) {
    g.adj.assign(g.vertices.size(), {});
    for (const auto& ord : g.line_orders)
        for (size_t i = 0; i + 1 < ord.size(); ++i) {
            g.adj[ord[i]].push_back(ord[i + 1]);
            g.adj[ord[i + 1]].push_back(ord[i]);
        }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
}

} // namespace

ArrangementGraph build_from_wiring(const WiringDiagram& d) {
    auto rep = validate(d);
    if (!rep.ok)
        throw std::invalid_argument("build_from_wiring: invalid diagram: " +
                                    rep.issues.front().what);
    const int n = d.n;
    const int m = static_cast<int>(d.swaps.size());
    SweepState st = sweep(d);

    ArrangementGraph g;
    g.n = n;
    g.line_ids.resize(n);
    std::iota(g.line_ids.begin(), g.line_ids.end(), 1);
    g.line_orders.assign(n, {});
    g.vertices.resize(m);
    g.coords.resize(m);
    g.side.assign(m, std::vector<int>(n, 0));

    std::vector<int> asc(m), desc(m); // wires meeting at each crossing
    for (int t = 0; t < m; ++t) {
        int p = d.swaps[t];
        int a = st.levels[t][p - 1], b = st.levels[t][p];
        asc[t] = a;
        desc[t] = b;
        g.vertices[t] = {std::min(a, b), std::max(a, b)};
        g.coords[t] = {Rational(t + 1), Rational(2 * p - 1, 2) + 1}; // y = p + 1/2
        g.line_orders[a - 1].push_back(t);
        g.line_orders[b - 1].push_back(t);
        for (int w = 1; w <= n; ++w) {
            if (w == a || w == b) continue;
            int lw = st.level_of(w, t + 1);
            g.side[t][w - 1] = (Rational(2 * p + 1, 2) > lw) ? 1 : -1;
        }
    }
    finish_adjacency(g);

    // prev/next crossing along each wire
    std::vector<std::map<int, std::pair<int, int>>> nbr(n); // wire-1 -> t -> (prev,next)
    for (int w = 0; w < n; ++w) {
        const auto& ord = g.line_orders[w];
        for (size_t i = 0; i < ord.size(); ++i)
            nbr[w][ord[i]] = {i > 0 ? ord[i - 1] : -1,
                              i + 1 < ord.size() ? ord[i + 1] : -1};
    }

    g.rotation.assign(m, {});
    g.polylines.assign(m, {});
    auto wire_level_after = [&](int w, int t) { return st.level_of(w, t + 2); };
    auto edge_polyline = [&](int w, int t1, int t2) {
        // t1 < t2 consecutive crossings of wire w; level is constant between
        int q = wire_level_after(w, t1);
        std::vector<RationalPoint> pts;
        pts.push_back(g.coords[t1]);
        pts.push_back({Rational(t1 + 1) + Rational(1, 4), Rational(q)});
        pts.push_back({Rational(t2 + 1) - Rational(1, 4), Rational(q)});
        pts.push_back(g.coords[t2]);
        return pts;
    };
    for (int t = 0; t < m; ++t) {
        int a = asc[t], b = desc[t];
        auto [ap, an] = nbr[a - 1][t];
        auto [bp, bn] = nbr[b - 1][t];
        // counterclockwise from east: a continues up-right, b down-right
        struct D { int to; int wire; bool fwd; };
        for (D dart : {D{an, a, true}, D{bp, b, false}, D{ap, a, false}, D{bn, b, true}}) {
            if (dart.to < 0) continue;
            g.rotation[t].push_back(dart.to);
            int lo = std::min(t, dart.to), hi = std::max(t, dart.to);
            auto pts = edge_polyline(dart.wire, lo, hi);
            if (!dart.fwd) std::reverse(pts.begin(), pts.end());
            g.polylines[t].push_back(std::move(pts));
        }
    }

    // counterclockwise ray order: left side top-to-bottom, right side bottom-to-top
    for (int w = n; w >= 1; --w) g.infinity_cycle.emplace_back(w - 1, false);
    for (int f = 1; f <= n; ++f) g.infinity_cycle.emplace_back(n - f, true);
    return g;
}

namespace {

// counterclockwise angular order starting just above direction (1,0)
int half_of(const Rational& x, const Rational& y) {
    if (y > 0 || (y == 0 && x > 0)) return 0;
    return 1;
}

bool angle_less(const std::pair<Rational, Rational>& u, const std::pair<Rational, Rational>& v) {
    int hu = half_of(u.first, u.second), hv = half_of(v.first, v.second);
    if (hu != hv) return hu < hv;
    Rational cr = u.first * v.second - u.second * v.first;
    return cr > 0;
}

} // namespace

ArrangementGraph build_from_arrangement(const LineArrangement& A) {
    auto rep = is_simple(A);
    if (!rep.ok) {
        std::string why = rep.parallel_pair
                              ? "parallel lines " + std::to_string(rep.parallel_pair->first) +
                                    "," + std::to_string(rep.parallel_pair->second)
                              : "concurrent lines";
        throw std::invalid_argument("build_from_arrangement: not simple: " + why);
    }
    const int n = static_cast<int>(A.lines.size());

    ArrangementGraph g;
    g.n = n;
    std::vector<const RationalLine*> by_id(n);
    for (const auto& l : A.lines) g.line_ids.push_back(l.id);
    std::sort(g.line_ids.begin(), g.line_ids.end());
    for (const auto& l : A.lines) by_id[g.slot_of(l.id)] = &l;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            g.vertices.push_back({g.line_ids[i], g.line_ids[j]});
            g.coords.push_back(intersect(*by_id[i], *by_id[j]));
        }
    const int m = static_cast<int>(g.vertices.size());

    g.line_orders.assign(n, {});
    for (int s = 0; s < n; ++s) {
        std::vector<std::pair<Rational, int>> on;
        const RationalLine& l = *by_id[s];
        for (int v = 0; v < m; ++v)
            if (g.vertices[v].l1 == l.id || g.vertices[v].l2 == l.id)
                on.emplace_back(Rational(-l.b) * g.coords[v].x + Rational(l.a) * g.coords[v].y, v);
        std::sort(on.begin(), on.end());
        for (auto& [t, v] : on) g.line_orders[s].push_back(v);
    }
    finish_adjacency(g);

    g.side.assign(m, std::vector<int>(n, 0));
    for (int v = 0; v < m; ++v)
        for (int s = 0; s < n; ++s)
            g.side[v][s] = by_id[s]->side(g.coords[v]);

    g.rotation.assign(m, {});
    g.polylines.assign(m, {});
    for (int s = 0; s < n; ++s) {
        const auto& ord = g.line_orders[s];
        for (size_t i = 0; i + 1 < ord.size(); ++i) {
            g.rotation[ord[i]].push_back(ord[i + 1]);
            g.rotation[ord[i + 1]].push_back(ord[i]);
        }
    }
    for (int v = 0; v < m; ++v) {
        auto& rot = g.rotation[v];
        std::sort(rot.begin(), rot.end(), [&](int p, int q) {
            return angle_less({g.coords[p].x - g.coords[v].x, g.coords[p].y - g.coords[v].y},
                              {g.coords[q].x - g.coords[v].x, g.coords[q].y - g.coords[v].y});
        });
        for (int u : rot)
            g.polylines[v].push_back({g.coords[v], g.coords[u]});
    }

    std::vector<std::pair<std::pair<Rational, Rational>, std::pair<int, bool>>> rays;
    for (int s = 0; s < n; ++s) {
        const RationalLine& l = *by_id[s];
        rays.push_back({{Rational(-l.b), Rational(l.a)}, {s, true}});   // head
        rays.push_back({{Rational(l.b), Rational(-l.a)}, {s, false}});  // tail
    }
    std::sort(rays.begin(), rays.end(),
              [](const auto& r1, const auto& r2) { return angle_less(r1.first, r2.first); });
    for (auto& r : rays) g.infinity_cycle.push_back(r.second);
    return g;
}

namespace {

int rotation_index_of(const ArrangementGraph& g, const std::vector<std::vector<int>>& rot,
                      int v, int to) {
    const auto& r = rot[v];
    for (size_t k = 0; k < r.size(); ++k)
        if (r[k] == to) return static_cast<int>(k);
    throw std::logic_error("inconsistent rotation system");
}

const std::vector<RationalPoint>& polyline_of(const ArrangementGraph& g, int v, int to) {
    int k = rotation_index_of(g, g.rotation, v, to);
    return g.polylines[v][k];
}

struct TracedFaces {
    std::vector<std::vector<int>> walks;
    std::vector<Rational> areas;
    int outer = -1;
};

// interior kept on the left of each dart; the unique negative-area walk is
// the unbounded face
TracedFaces trace_faces(const ArrangementGraph& g, const std::vector<std::vector<int>>& rot,
                        const std::vector<int>& verts) {
    TracedFaces out;
    std::map<std::pair<int, int>, bool> used;
    for (int v : verts)
        for (int to : rot[v]) used[{v, to}] = false;

    for (int v0 : verts)
        for (int to0 : rot[v0]) {
            if (used[{v0, to0}]) continue;
            std::vector<int> walk;
            Rational area = 0;
            int v = v0, to = to0;
            do {
                used[{v, to}] = true;
                walk.push_back(v);
                const auto& pts = polyline_of(g, v, to);
                for (size_t i = 0; i + 1 < pts.size(); ++i)
                    area += pts[i].x * pts[i + 1].y - pts[i + 1].x * pts[i].y;
                int deg = static_cast<int>(rot[to].size());
                int j = rotation_index_of(g, rot, to, v);
                int next = (j + deg - 1) % deg; // cw-next keeps the face on the left
                v = to;
                to = rot[to][next];
            } while (!(v == v0 && to == to0));
            out.walks.push_back(std::move(walk));
            out.areas.push_back(area / 2);
        }

    // the unbounded face is the minimum-area walk: negative when the graph has a
    // cycle, zero for trees; every bounded face must come out positive
    out.outer = 0;
    for (size_t f = 1; f < out.areas.size(); ++f)
        if (out.areas[f] < out.areas[out.outer]) out.outer = static_cast<int>(f);
    for (size_t f = 0; f < out.areas.size(); ++f)
        if (static_cast<int>(f) != out.outer && !(out.areas[f] > 0))
            throw std::logic_error("face traversal found a bounded face with nonpositive area");
    return out;
}

} // namespace

FaceStructure faces(const ArrangementGraph& g) {
    std::vector<int> all(g.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    TracedFaces t = trace_faces(g, g.rotation, all);

    long E = 0;
    for (const auto& r : g.rotation) E += static_cast<long>(r.size());
    E /= 2;
    long V = static_cast<long>(g.vertices.size());
    long F = static_cast<long>(t.walks.size());
    if (V - E + F != 2)
        throw std::logic_error("Euler check failed: V-E+F = " + std::to_string(V - E + F));

    FaceStructure fs;
    fs.walks = std::move(t.walks);
    fs.areas = std::move(t.areas);
    fs.outer = t.outer;
    return fs;
}

std::vector<int> outer_face_vertices(const ArrangementGraph& g) {
    FaceStructure fs = faces(g);
    std::vector<int> out(fs.walks[fs.outer].begin(), fs.walks[fs.outer].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> one_layer_vertices(const ArrangementGraph& g) {
    std::vector<int> outer = outer_face_vertices(g);
    std::vector<char> gone(g.vertices.size(), 0);
    for (int v : outer) gone[v] = 1;

    std::vector<std::vector<int>> rot(g.vertices.size());
    std::vector<int> alive;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (gone[v]) continue;
        alive.push_back(static_cast<int>(v));
        for (int to : g.rotation[v])
            if (!gone[to]) rot[v].push_back(to);
    }

    std::vector<int> result;
    std::vector<char> seen(g.vertices.size(), 0);
    for (int s : alive) {
        if (seen[s]) continue;
        // component of the surviving subgraph
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int to : rot[v])
                if (!seen[to]) { seen[to] = 1; stack.push_back(to); }
        }
        std::sort(comp.begin(), comp.end());
        bool has_edge = false;
        for (int v : comp) has_edge = has_edge || !rot[v].empty();
        if (!has_edge) {
            result.insert(result.end(), comp.begin(), comp.end());
            continue;
        }
        TracedFaces t = trace_faces(g, rot, comp);
        std::vector<int> w(t.walks[t.outer].begin(), t.walks[t.outer].end());
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        result.insert(result.end(), w.begin(), w.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> degree_sequence_of(const ArrangementGraph& g) {
    std::vector<int> d;
    for (const auto& nb : g.adj) d.push_back(static_cast<int>(nb.size()));
    std::sort(d.rbegin(), d.rend());
    return d;
}

AbstractGraph AbstractGraph::from(const ArrangementGraph& g) {
    AbstractGraph a;
    a.n = static_cast<int>(g.vertices.size());
    a.adj.resize(a.n);
    for (int v = 0; v < a.n; ++v)
        for (int u : g.adj[v]) a.adj[v].insert(u);
    return a;
}

bool AbstractGraph::has_edge(int u, int v) const { return adj[u].count(v) > 0; }

void AbstractGraph::add_edge(int u, int v) {
    adj[u].insert(v);
    adj[v].insert(u);
}

void AbstractGraph::remove_edge(int u, int v) {
    adj[u].erase(v);
    adj[v].erase(u);
}

std::vector<int> AbstractGraph::degree_sequence() const {
    std::vector<int> d;
    for (const auto& nb : adj) d.push_back(static_cast<int>(nb.size()));
    std::sort(d.rbegin(), d.rend());
    return d;
}

namespace {

// iterated neighbor-degree refinement; colors agree across both graphs
std::vector<int> wl_colors(const AbstractGraph& g, int rounds) {
    std::vector<int> color(g.n);
    for (int v = 0; v < g.n; ++v) color[v] = static_cast<int>(g.adj[v].size());
    for (int r = 0; r < rounds; ++r) {
        std::map<std::pair<int, std::vector<int>>, int> canon;
        std::vector<std::pair<int, std::vector<int>>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            for (int u : g.adj[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        for (int v = 0; v < g.n; ++v) canon.emplace(sig[v], 0);
        int next = 0;
        for (auto& [k, id] : canon) id = next++;
        for (int v = 0; v < g.n; ++v) color[v] = canon[sig[v]];
    }
    return color;
}

bool extend_iso(const AbstractGraph& a, const AbstractGraph& b, const std::vector<int>& order,
                size_t pos, std::vector<int>& map_ab, std::vector<char>& used,
                const std::vector<int>& ca, const std::vector<int>& cb) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.n; ++w) {
        if (used[w] || cb[w] != ca[v]) continue;
        bool ok = true;
        for (int u : a.adj[v]) {
            if (map_ab[u] >= 0 && !b.has_edge(map_ab[u], w)) { ok = false; break; }
        }
        if (ok) {
            // mapped non-neighbors must stay non-neighbors
            for (int u = 0; u < a.n && ok; ++u)
                if (map_ab[u] >= 0 && !a.adj[v].count(u) && u != v && b.has_edge(map_ab[u], w))
                    ok = false;
        }
        if (!ok) continue;
        map_ab[v] = w;
        used[w] = 1;
        if (extend_iso(a, b, order, pos + 1, map_ab, used, ca, cb)) return true;
        map_ab[v] = -1;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const AbstractGraph& a, const AbstractGraph& b) {
    if (a.n > 21 || b.n > 21)
        throw std::invalid_argument("is_isomorphic: size cap of 21 vertices exceeded");
    if (a.n != b.n) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;

    std::vector<int> ca = wl_colors(a, 3), cb = wl_colors(b, 3);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;

    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    // rarest color class first narrows the search
    std::map<int, int> freq;
    for (int c : ca) freq[c]++;
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (freq[ca[u]] != freq[ca[v]]) return freq[ca[u]] < freq[ca[v]];
        return u < v;
    });

    std::vector<int> map_ab(a.n, -1);
    std::vector<char> used(b.n, 0);
    return extend_iso(a, b, order, 0, map_ab, used, ca, cb);
}

AbstractGraph two_switch(const AbstractGraph& g, std::pair<int, int> xy, std::pair<int, int> zw) {
    auto [x, y] = xy;
    auto [z, w] = zw;
    for (int v : {x, y, z, w})
        if (v < 0 || v >= g.n) throw std::invalid_argument("two_switch: vertex out of range");
    if (x == y || z == w || x == z || x == w || y == z || y == w)
        throw std::invalid_argument("two_switch: the four endpoints must be distinct");
    if (!g.has_edge(x, y)) throw std::invalid_argument("two_switch: first edge absent");
    if (!g.has_edge(z, w)) throw std::invalid_argument("two_switch: second edge absent");
    if (g.has_edge(y, z)) throw std::invalid_argument("two_switch: replacement edge yz present");
    if (g.has_edge(w, x)) throw std::invalid_argument("two_switch: replacement edge wx present");
    AbstractGraph h = g;
    h.remove_edge(x, y);
    h.remove_edge(z, w);
    h.add_edge(y, z);
    h.add_edge(w, x);
    return h;
}

ArrangementSweep sweep_arrangement(const LineArrangement& A) {
    auto rep = is_simple(A);
    if (!rep.ok) throw std::invalid_argument("sweep_arrangement requires a simple arrangement");
    const int n = static_cast<int>(A.lines.size());

    std::vector<RationalPoint> pts;
    std::vector<std::pair<int, int>> pairs; // indices into A.lines
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pts.push_back(intersect(A.lines[i], A.lines[j]));
            pairs.emplace_back(i, j);
        }

    // generic direction (1, q): no line orthogonal, all projections distinct
    long q = -1;
    for (long cand = 0; cand < 100000; ++cand) {
        bool ok = true;
        for (const auto& l : A.lines)
            if (l.a * cand - l.b == 0) { ok = false; break; }
        if (ok) {
            std::vector<Rational> proj;
            for (const auto& p : pts) proj.push_back(p.x + Rational(cand) * p.y);
            std::sort(proj.begin(), proj.end());
            for (size_t i = 0; i + 1 < proj.size(); ++i)
                if (proj[i] == proj[i + 1]) { ok = false; break; }
        }
        if (ok) { q = cand; break; }
    }
    if (q < 0) throw std::logic_error("sweep_arrangement: no generic direction found");

    // initial bottom-to-top order: slope of each line in sweep coordinates,
    // descending (steepest rises from the bottom as the sweep starts)
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto slope = [&](int i) {
        const auto& l = A.lines[i];
        return make_rational(BigInt(l.a) + q * l.b, BigInt(l.a) * q - l.b);
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) { return slope(i) > slope(j); });

    std::vector<size_t> by_time(pts.size());
    std::iota(by_time.begin(), by_time.end(), 0);
    std::sort(by_time.begin(), by_time.end(), [&](size_t i, size_t j) {
        return pts[i].x + Rational(q) * pts[i].y < pts[j].x + Rational(q) * pts[j].y;
    });

    std::vector<int> level_of(n); // line index -> current 0-based level
    for (int k = 0; k < n; ++k) level_of[order[k]] = k;
    std::vector<int> at_level = order;

    ArrangementSweep out;
    out.diagram.n = n;
    for (size_t t : by_time) {
        auto [i, j] = pairs[t];
        int li = level_of[i], lj = level_of[j];
        if (std::abs(li - lj) != 1)
            throw std::logic_error("sweep_arrangement: crossing lines not adjacent");
        int p = std::min(li, lj);
        out.diagram.swaps.push_back(p + 1);
        std::swap(at_level[p], at_level[p + 1]);
        level_of[at_level[p]] = p;
        level_of[at_level[p + 1]] = p + 1;
    }
    for (int k = 0; k < n; ++k) out.wire_to_line_id.push_back(A.lines[order[k]].id);

    if (n >= 3 && !validate(out.diagram).ok)
        throw std::logic_error("sweep_arrangement produced an invalid diagram");
    return out;
}

} // namespace arrgraph
