#include "arrgraph/io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace arrgraph {

using nlohmann::json;

json wiring_to_json(const WiringDiagram& d) {
    return json{{"n", d.n}, {"swaps", d.swaps}};
}

WiringDiagram wiring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("swaps"))
        throw std::invalid_argument("wiring JSON needs keys \"n\" and \"swaps\"");
    WiringDiagram d;
    d.n = j.at("n").get<int>();
    d.swaps = j.at("swaps").get<std::vector<int>>();
    return d;
}

std::string wiring_to_text(const WiringDiagram& d) {
    std::ostringstream os;
    os << d.n << ":";
    for (int s : d.swaps) os << " " << s;
    return os.str();
}

WiringDiagram wiring_from_text(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("wiring text needs the form \"n: s1 s2 ...\"");
    WiringDiagram d;
    try {
        d.n = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
        throw std::invalid_argument("wiring text: bad wire count");
    }
    std::istringstream is(line.substr(colon + 1));
    int s;
    while (is >> s) d.swaps.push_back(s);
    if (!is.eof()) throw std::invalid_argument("wiring text: trailing garbage");
    return d;
}

json arrangement_to_json(const LineArrangement& A) {
    auto lines = A.lines;
    std::sort(lines.begin(), lines.end(),
              [](const RationalLine& a, const RationalLine& b) { return a.id < b.id; });
    json arr = json::array();
    for (const auto& l : lines)
        arr.push_back({l.a.str(), l.b.str(), l.c.str()});
    return json{{"lines", arr}};
}

namespace {

BigInt bigint_from_json(const json& v) {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_integer()) return BigInt(v.get<long long>());
    throw std::invalid_argument("line coefficient must be an integer or decimal string");
}

} // namespace

LineArrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lines"))
        throw std::invalid_argument("arrangement JSON needs key \"lines\"");
    LineArrangement A;
    int id = 0;
    for (const auto& row : j.at("lines")) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("each line must be a triple [a, b, c]");
        RationalLine l;
        l.a = bigint_from_json(row[0]);
        l.b = bigint_from_json(row[1]);
        l.c = bigint_from_json(row[2]);
        l.id = ++id;
        l.normalize();
        A.lines.push_back(l);
    }
    return A;
}

json graph_to_json(const ArrangementGraph& g) {
    json verts = json::array();
    for (size_t v = 0; v < g.vertices.size(); ++v)
        verts.push_back({{"lines", {g.vertices[v].l1, g.vertices[v].l2}},
                         {"x", to_string(g.coords[v].x)},
                         {"y", to_string(g.coords[v].y)}});
    json edges = json::array();
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int u : g.adj[v])
            if (static_cast<int>(v) < u) edges.push_back({v, u});
    json orders = json::array();
    for (const auto& ord : g.line_orders) orders.push_back(ord);
    return json{{"n", g.n},
                {"line_ids", g.line_ids},
                {"vertices", verts},
                {"edges", edges},
                {"line_orders", orders}};
}

AnalysisReport analyze(const ArrangementGraph& g) {
    AnalysisReport r;
    r.degree_sequence = degree_sequence_of(g);
    r.ecc = all_distances(g);
    r.outer = outer_face_vertices(g);
    r.one_layer = one_layer_vertices(g);
    r.diametrical_equals_outer = (r.ecc.diametrical == r.outer);
    return r;
}

json report_to_json(const ArrangementGraph& g, const AnalysisReport& r,
                    bool include_distances) {
    auto labels = [&](const std::vector<int>& vs) {
        json a = json::array();
        for (int v : vs) a.push_back(g.vertex_label(v));
        return a;
    };
    json ecc = json::object();
    for (size_t v = 0; v < g.vertices.size(); ++v)
        ecc[g.vertex_label(v)] = r.ecc.ecc[v];
    json out{{"n", g.n},
             {"degree_sequence", r.degree_sequence},
             {"diameter", r.ecc.diameter},
             {"radius", r.ecc.radius},
             {"diametrical", labels(r.ecc.diametrical)},
             {"central", labels(r.ecc.central)},
             {"outer", labels(r.outer)},
             {"one_layer", labels(r.one_layer)},
             {"diametrical_equals_outer", r.diametrical_equals_outer},
             {"eccentricity", ecc}};
    if (include_distances) {
        json dist = json::object();
        for (size_t u = 0; u < g.vertices.size(); ++u) {
            json row = json::object();
            for (size_t v = 0; v < g.vertices.size(); ++v)
                row[g.vertex_label(v)] = r.ecc.dist[u][v];
            dist[g.vertex_label(u)] = row;
        }
        out["distances"] = dist;
    }
    return out;
}

json run_to_json(const VerificationRun& run) {
    json inst = json::object();
    for (const auto& [n, c] : run.instances_per_n) inst[std::to_string(n)] = c;
    json fails = json::array();
    for (const auto& f : run.failures) {
        json rec{{"claim", f.claim}, {"n", f.n}, {"detail", f.detail}};
        if (f.witness.n > 0) rec["witness"] = wiring_to_json(f.witness);
        fails.push_back(rec);
    }
    return json{{"n_max", run.n_max},
                {"claims", run.claims},
                {"instances", inst},
                {"total_instances", run.total_instances},
                {"failures", fails},
                {"notes", run.notes},
                {"ok", run.ok()}};
}

std::string to_dot(const ArrangementGraph& g, bool mark_outer, bool mark_diametrical) {
    std::set<int> outer, diam;
    if (mark_outer) {
        auto o = outer_face_vertices(g);
        outer.insert(o.begin(), o.end());
    }
    if (mark_diametrical) {
        auto r = all_distances(g);
        diam.insert(r.diametrical.begin(), r.diametrical.end());
    }
    std::ostringstream os;
    os << "graph arrangement {\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << g.vertex_label(v) << "\"";
        if (outer.count(static_cast<int>(v))) os << " color=red";
        if (diam.count(static_cast<int>(v))) os << " style=filled fillcolor=lightblue";
        os << "];\n";
    }
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int u : g.adj[v])
            if (static_cast<int>(v) < u) os << "  v" << v << " -- v" << u << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_svg(const ArrangementGraph& g, bool mark_outer, bool mark_diametrical) {
    std::set<int> outer, diam;
    if (mark_outer) {
        auto o = outer_face_vertices(g);
        outer.insert(o.begin(), o.end());
    }
    if (mark_diametrical) {
        auto r = all_distances(g);
        diam.insert(r.diametrical.begin(), r.diametrical.end());
    }

    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    auto touch = [&](const RationalPoint& p) {
        double x = static_cast<double>(p.x), y = static_cast<double>(p.y);
        minx = std::min(minx, x); maxx = std::max(maxx, x);
        miny = std::min(miny, y); maxy = std::max(maxy, y);
    };
    for (const auto& per_v : g.polylines)
        for (const auto& pts : per_v)
            for (const auto& p : pts) touch(p);
    if (g.polylines.empty() || maxx < minx) { minx = miny = 0; maxx = maxy = 1; }
    double w = maxx - minx, h = maxy - miny;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double margin = 0.05 * std::max(w, h);
    double scale = 600.0 / std::max(w, h);
    auto X = [&](const Rational& x) { return (static_cast<double>(x) - minx + margin) * scale; };
    auto Y = [&](const Rational& y) { return (maxy - static_cast<double>(y) + margin) * scale; };
    double W = (w + 2 * margin) * scale, H = (h + 2 * margin) * scale;

    std::ostringstream os;
    os.precision(8);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H
       << "\">\n";
    os << "  <g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (size_t k = 0; k < g.rotation[v].size(); ++k) {
            if (g.rotation[v][k] < static_cast<int>(v)) continue; // one direction
            os << "    <polyline points=\"";
            for (const auto& p : g.polylines[v][k])
                os << X(p.x) << "," << Y(p.y) << " ";
            os << "\"/>\n";
        }
    os << "  </g>\n";
    double r0 = 0.015 * std::max(W, H);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        bool is_outer = outer.count(static_cast<int>(v)) > 0;
        bool is_diam = diam.count(static_cast<int>(v)) > 0;
        os << "  <circle cx=\"" << X(g.coords[v].x) << "\" cy=\"" << Y(g.coords[v].y)
           << "\" r=\"" << (is_outer ? 1.6 * r0 : r0) << "\" fill=\""
           << (is_diam ? "orange" : "black") << "\"";
        if (is_outer) os << " stroke=\"red\" stroke-width=\"2\"";
        os << ">\n    <title>" << g.vertex_label(v) << "</title>\n  </circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

ArrangementGraph graph_from_input_json(const json& j) {
    if (j.is_object() && j.contains("swaps")) return build_from_wiring(wiring_from_json(j));
    if (j.is_object() && j.contains("lines"))
        return build_from_arrangement(arrangement_from_json(j));
    throw std::invalid_argument("input JSON is neither a wiring diagram nor an arrangement");
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace arrgraph
