#include "arrgraph/oracle.hpp"

#include "arrgraph/graph.hpp"
#include "arrgraph/metrics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace arrgraph {

std::vector<int> wiring_degree_sequence(const WiringDiagram& d) {
    auto rep = validate(d);
    if (!rep.ok) throw std::invalid_argument("wiring_degree_sequence: invalid diagram");
    const int n = d.n;
    const int m = static_cast<int>(d.swaps.size());
    std::vector<int> levels(n);
    for (int i = 0; i < n; ++i) levels[i] = i + 1;
    std::vector<std::vector<int>> orders(n);
    for (int t = 0; t < m; ++t) {
        int p = d.swaps[t];
        int a = levels[p - 1], b = levels[p];
        orders[a - 1].push_back(t);
        orders[b - 1].push_back(t);
        std::swap(levels[p - 1], levels[p]);
    }
    std::vector<int> extremes(m, 0);
    for (int w = 0; w < n; ++w) {
        extremes[orders[w].front()]++;
        extremes[orders[w].back()]++;
    }
    std::vector<int> deg(m);
    for (int t = 0; t < m; ++t) deg[t] = 4 - extremes[t];
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

std::vector<std::vector<int>> predicted_census(int n) {
    std::set<std::vector<int>> acc;
    for (int d2 = 3; d2 <= n; ++d2) {
        if (d2 == n && n % 2 == 0) continue;
        int d3 = 2 * (n - d2);
        int d4 = n * (n - 5) / 2 + d2;
        std::vector<int> seq;
        for (int i = 0; i < d4; ++i) seq.push_back(4);
        for (int i = 0; i < d3; ++i) seq.push_back(3);
        for (int i = 0; i < d2; ++i) seq.push_back(2);
        acc.insert(seq);
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::vector<int>> degree_sequence_census(int n, bool allow_n6) {
    std::set<std::vector<int>> seen;
    enumerate_all(n, [&](const WiringDiagram& d) {
        seen.insert(wiring_degree_sequence(d));
        return true;
    }, EnumerateOptions{allow_n6});
    return {seen.begin(), seen.end()};
}

namespace {

// everything the per-instance claims may need, computed once and shared
struct Instance {
    const WiringDiagram& d;
    ArrangementGraph g;
    std::optional<EccentricityReport> ecc_;
    std::optional<std::vector<int>> outer_;

    explicit Instance(const WiringDiagram& dia) : d(dia), g(build_from_wiring(dia)) {}

    const EccentricityReport& ecc() {
        if (!ecc_) ecc_ = all_distances(g);
        return *ecc_;
    }
    const std::vector<int>& outer() {
        if (!outer_) outer_ = outer_face_vertices(g);
        return *outer_;
    }
};

std::string label_of(const Instance& in, int v) { return in.g.vertex_label(v); }

using CheckFn = std::optional<std::string> (*)(Instance&);

std::optional<std::string> check_identities(Instance& in) {
    const int n = in.g.n;
    auto ds = degree_sequence_of(in.g);
    int d2 = 0, d3 = 0, d4 = 0;
    for (int x : ds) {
        if (x == 2) ++d2;
        else if (x == 3) ++d3;
        else if (x == 4) ++d4;
        else return "degree " + std::to_string(x) + " outside {2,3,4}";
    }
    if (d2 + d3 + d4 != n * (n - 1) / 2) return "vertex count mismatch";
    if (2 * d2 + d3 != 2 * n) return "span-end count 2*d2+d3 != 2n";
    if (d2 < 3) return "fewer than 3 degree-2 crossings";
    if (d2 > n) return "more than n degree-2 crossings";
    if (d2 == n && n % 2 == 0) return "d2 = n with n even";
    return std::nullopt;
}

std::optional<std::string> check_diameter(Instance& in) {
    if (in.ecc().diameter != in.g.n - 2)
        return "diameter " + std::to_string(in.ecc().diameter) + " != n-2";
    return std::nullopt;
}

std::optional<std::string> check_diametrical_outer(Instance& in) {
    if (in.ecc().diametrical != in.outer())
        return "diametrical set differs from outer face set";
    return std::nullopt;
}

std::optional<std::string> check_colinear_paths(Instance& in) {
    for (int s = 0; s < in.g.n; ++s) {
        const auto& ord = in.g.line_orders[s];
        for (size_t i = 0; i < ord.size(); ++i)
            for (size_t j = i + 1; j < ord.size(); ++j) {
                auto paths = all_shortest_paths(in.g, ord[i], ord[j]);
                if (paths.size() != 1)
                    return "co-linear pair " + label_of(in, ord[i]) + " / " +
                           label_of(in, ord[j]) + " has " + std::to_string(paths.size()) +
                           " shortest paths";
                std::vector<int> sub(ord.begin() + i, ord.begin() + j + 1);
                if (paths[0] != sub)
                    return "co-linear shortest path leaves the common line";
                if (in.ecc().dist[ord[i]][ord[j]] != static_cast<int>(j - i))
                    return "co-linear distance differs from the index gap";
            }
    }
    return std::nullopt;
}

std::optional<std::string> check_path_line_count(Instance& in) {
    const int m = static_cast<int>(in.g.vertices.size());
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            int k = in.ecc().dist[u][v];
            for (const auto& path : all_shortest_paths(in.g, u, v)) {
                std::set<int> lines;
                for (int x : path) {
                    lines.insert(in.g.vertices[x].l1);
                    lines.insert(in.g.vertices[x].l2);
                }
                if (static_cast<int>(lines.size()) != k + 2)
                    return "path " + label_of(in, u) + " -> " + label_of(in, v) + " touches " +
                           std::to_string(lines.size()) + " lines, expected k+2 = " +
                           std::to_string(k + 2);
                if (k == in.g.n - 2 && static_cast<int>(lines.size()) != in.g.n)
                    return "diametral path misses a line";
            }
        }
    return std::nullopt;
}

std::optional<std::string> check_quadrant(Instance& in) {
    const int m = static_cast<int>(in.g.vertices.size());
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            const auto& a = in.g.vertices[u];
            const auto& b = in.g.vertices[v];
            if (a.l1 == b.l1 || a.l1 == b.l2 || a.l2 == b.l1 || a.l2 == b.l2) continue;
            Pseudoquadrant q = quadrant_of(in.g, u, v);
            for (const auto& path : all_shortest_paths(in.g, u, v))
                for (int x : path)
                    if (!quadrant_contains(in.g, q, x))
                        return "shortest path " + label_of(in, u) + " -> " + label_of(in, v) +
                               " leaves the closed quadrant at " + label_of(in, x);
        }
    return std::nullopt;
}

std::optional<std::string> check_eccentric_witness(Instance& in) {
    const int m = static_cast<int>(in.g.vertices.size());
    std::set<int> outer(in.outer().begin(), in.outer().end());
    for (int u = 0; u < m; ++u) {
        auto far = eccentric_vertices_of(in.ecc(), u);
        bool low = false, on_outer = false;
        for (int v : far) {
            if (in.g.degree(v) <= 3) low = true;
            if (outer.count(v)) on_outer = true;
        }
        if (!low)
            return "every eccentric vertex of " + label_of(in, u) + " has degree 4";
        if (!on_outer)
            return "no eccentric vertex of " + label_of(in, u) + " lies on the outer face";
    }
    return std::nullopt;
}

std::optional<std::string> check_one_layer(Instance& in) {
    std::set<int> outer(in.outer().begin(), in.outer().end());
    for (int v : one_layer_vertices(in.g)) {
        bool touches = false;
        for (int u : in.g.adj[v]) touches = touches || outer.count(u) > 0;
        if (!touches) continue;
        if (in.ecc().ecc[v] != in.g.n - 3)
            return "1-layer vertex " + label_of(in, v) + " with outer neighbor has ecc " +
                   std::to_string(in.ecc().ecc[v]) + " != n-3";
    }
    return std::nullopt;
}

std::optional<std::string> check_separation_bound(Instance& in) {
    const int m = static_cast<int>(in.g.vertices.size());
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) {
            int sep = separating_line_count(in.g, u, v);
            const auto& a = in.g.vertices[u];
            const auto& b = in.g.vertices[v];
            bool colinear =
                (a.l1 == b.l1 || a.l1 == b.l2 || a.l2 == b.l1 || a.l2 == b.l2);
            int need = colinear ? sep + 1 : sep + 2;
            if (in.ecc().dist[u][v] < need)
                return "distance " + std::to_string(in.ecc().dist[u][v]) + " below " +
                       std::to_string(need) + " for " + label_of(in, u) + " / " +
                       label_of(in, v);
        }
    return std::nullopt;
}

std::optional<std::string> check_restricted_sweep(Instance& in) {
    WiringDiagram r = restricted_sweep(in.g);
    if (!validate(r).ok) return "restricted sweep output invalid";
    int count = 0, where = -1;
    for (size_t t = 0; t < r.swaps.size(); ++t)
        if (r.swaps[t] == 1) { ++count; where = static_cast<int>(t); }
    if (count != 1) return "restricted sweep has " + std::to_string(count) + " level-1 swaps";
    if (where == 0 || where + 1 == static_cast<int>(r.swaps.size()))
        return "level-1 swap is the first or last crossing";
    // crossings index in build order, so the level-1 swap is vertex `where`
    ArrangementGraph h = build_from_wiring(r);
    if (h.degree(where) != 2) return "level-1 crossing is not degree 2";
    if (!is_isomorphic(AbstractGraph::from(in.g), AbstractGraph::from(h)))
        return "restricted sweep changed the arrangement graph";
    return std::nullopt;
}

struct RegisteredClaim {
    ClaimInfo info;
    CheckFn fn;
};

const std::vector<RegisteredClaim>& registry_impl() {
    static const std::vector<RegisteredClaim> reg = {
        {{"identities", "degree counts satisfy the forced size identities", false, 6},
         check_identities},
        {{"diameter", "graph diameter equals n-2", false, 6}, check_diameter},
        {{"diametrical-outer", "diametrical vertices are exactly the outer face vertices", false, 5},
         check_diametrical_outer},
        {{"colinear-paths", "co-linear pairs have a unique shortest path along their line",
          false, 5},
         check_colinear_paths},
        {{"path-line-count", "a shortest path of length k touches exactly k+2 lines", false, 5},
         check_path_line_count},
        {{"quadrant", "shortest paths stay in the closed quadrant of the target", false, 5},
         check_quadrant},
        {{"eccentric-witness",
          "every vertex has an eccentric vertex of degree <= 3 and one on the outer face",
          false, 5},
         check_eccentric_witness},
        {{"one-layer", "1-layer vertices with an outer neighbor have eccentricity n-3", false,
          5},
         check_one_layer},
        {{"separation-bound", "distance is at least the separating line count plus 1 or 2",
          false, 5},
         check_separation_bound},
        {{"restricted-sweep",
          "re-sweeping gives a valid diagram with exactly one interior level-1 swap", false, 5},
         check_restricted_sweep},
        {{"census", "degree sequence census equals the arithmetic prediction", true, 6},
         nullptr},
        {{"two-switch", "some legal edge exchange leaves the n=4 arrangement class", true, 5},
         nullptr},
    };
    return reg;
}

} // namespace

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> v;
        for (const auto& r : registry_impl()) v.push_back(r.info);
        return v;
    }();
    return infos;
}

std::optional<TwoSwitchWitness> find_two_switch_witness() {
    auto diagrams = enumerate_all(4);
    // all n=4 arrangement graphs are isomorphic; the first one represents the class
    AbstractGraph a = AbstractGraph::from(build_from_wiring(diagrams.front()));
    const AbstractGraph& ref = a;

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.n; ++u)
        for (int v : a.adj[u]) edges.emplace_back(u, v); // both orientations
    std::sort(edges.begin(), edges.end());

    for (const auto& e1 : edges)
        for (const auto& e2 : edges) {
            auto [x, y] = e1;
            auto [z, w] = e2;
            std::set<int> four{x, y, z, w};
            if (four.size() != 4) continue;
            if (a.has_edge(y, z) || a.has_edge(w, x)) continue;
            AbstractGraph h = two_switch(a, e1, e2);
            if (!is_isomorphic(h, ref))
                return TwoSwitchWitness{diagrams.front(), e1, e2};
        }
    return std::nullopt;
}

VerificationRun verify_all(int n_max, const VerifyOptions& opts) {
    if (n_max < 3 || n_max > 6)
        throw std::invalid_argument("verify_all supports 3 <= n_max <= 6");
    if (n_max == 6 && !opts.allow_n6)
        throw std::invalid_argument("n_max=6 verification must be opted into explicitly");

    std::vector<RegisteredClaim> selected;
    for (const auto& r : registry_impl()) {
        if (opts.claims.empty() ||
            std::find(opts.claims.begin(), opts.claims.end(), r.info.id) != opts.claims.end())
            selected.push_back(r);
    }
    for (const auto& want : opts.claims) {
        bool known = false;
        for (const auto& r : registry_impl()) known = known || r.info.id == want;
        if (!known) throw std::invalid_argument("unknown claim id: " + want);
    }

    VerificationRun run;
    run.n_max = n_max;
    for (const auto& r : selected) run.claims.push_back(r.info.id);

    std::map<std::string, int> fail_count;
    bool want_census = false, want_two_switch = false;
    for (const auto& r : selected) {
        if (r.info.id == "census") want_census = true;
        if (r.info.id == "two-switch") want_two_switch = true;
    }

    for (int n = 3; n <= n_max; ++n) {
        std::vector<const RegisteredClaim*> active;
        for (const auto& r : selected) {
            if (r.info.aggregate) continue;
            if (n <= r.info.max_n) active.push_back(&r);
            else
                run.notes.push_back("claim " + r.info.id + " skipped at n=" +
                                    std::to_string(n) + " (cap n<=" +
                                    std::to_string(r.info.max_n) + ")");
        }
        std::set<std::vector<int>> census_seen;
        long count = 0;
        enumerate_all(n, [&](const WiringDiagram& d) {
            ++count;
            if (want_census) census_seen.insert(wiring_degree_sequence(d));
            if (!active.empty()) {
                Instance in(d);
                for (const auto* r : active) {
                    auto bad = r->fn(in);
                    if (bad) {
                        if (fail_count[r->info.id]++ < opts.max_failures_per_claim)
                            run.failures.push_back({r->info.id, n, d, *bad});
                    }
                }
            }
            return true;
        }, EnumerateOptions{opts.allow_n6});
        run.instances_per_n[n] = count;
        run.total_instances += count;

        if (want_census) {
            std::vector<std::vector<int>> got(census_seen.begin(), census_seen.end());
            if (got != predicted_census(n)) {
                std::ostringstream why;
                why << "census mismatch at n=" << n << ": " << got.size()
                    << " observed sequences vs " << predicted_census(n).size() << " predicted";
                run.failures.push_back({"census", n, {}, why.str()});
            }
        }
        if (want_two_switch && n == 4) {
            auto w = find_two_switch_witness();
            if (!w)
                run.failures.push_back(
                    {"two-switch", 4, {}, "no legal 2-switch escapes the arrangement class"});
        }
    }

    for (auto& [id, c] : fail_count)
        if (c > opts.max_failures_per_claim)
            run.notes.push_back("claim " + id + ": " + std::to_string(c) +
                                " failures total, first " +
                                std::to_string(opts.max_failures_per_claim) + " recorded");
    return run;
}

} // namespace arrgraph
