#include "arrgraph/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace arrgraph {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), abs(c));
    return g == 0 ? BigInt(1) : g;
}

} // namespace

void RationalLine::normalize() {
    if (a == 0 && b == 0)
        throw std::invalid_argument("degenerate line: a = b = 0");
    BigInt g = gcd3(a, b, c);
    a /= g; b /= g; c /= g;
    int lead = (a != 0) ? sign_of(a) : sign_of(b);
    if (lead < 0) { a = -a; b = -b; c = -c; }
}

bool RationalLine::contains(const RationalPoint& p) const {
    return a * p.x + b * p.y == c;
}

int RationalLine::side(const RationalPoint& p) const {
    return sign_of(Rational(a * p.x + b * p.y - c));
}

RationalLine line_through(const RationalPoint& p, const RationalPoint& q, int id) {
    if (p == q) throw std::invalid_argument("line_through needs two distinct points");
    Rational ar = p.y - q.y;
    Rational br = q.x - p.x;
    Rational cr = ar * p.x + br * p.y;
    // clear denominators
    BigInt den = boost::multiprecision::lcm(
        boost::multiprecision::lcm(denominator(ar), denominator(br)), denominator(cr));
    RationalLine l;
    l.a = numerator(ar) * (den / denominator(ar));
    l.b = numerator(br) * (den / denominator(br));
    l.c = numerator(cr) * (den / denominator(cr));
    l.id = id;
    l.normalize();
    return l;
}

RationalPoint intersect(const RationalLine& l1, const RationalLine& l2) {
    BigInt det = l1.a * l2.b - l2.a * l1.b;
    if (det == 0)
        throw parallel_lines_error("lines " + std::to_string(l1.id) + " and " +
                                   std::to_string(l2.id) + " are parallel");
    RationalPoint p;
    p.x = make_rational(l1.c * l2.b - l2.c * l1.b, det);
    p.y = make_rational(l1.a * l2.c - l2.a * l1.c, det);
    return p;
}

const RationalLine& LineArrangement::line_by_id(int id) const {
    for (const auto& l : lines)
        if (l.id == id) return l;
    throw std::invalid_argument("no line with id " + std::to_string(id));
}

int LineArrangement::max_id() const {
    int m = 0;
    for (const auto& l : lines) m = std::max(m, l.id);
    return m;
}

SimplicityReport is_simple(const LineArrangement& A) {
    SimplicityReport rep;
    const size_t n = A.lines.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const auto& li = A.lines[i];
            const auto& lj = A.lines[j];
            if (li.a * lj.b - lj.a * li.b == 0) {
                rep.parallel_pair = {li.id, lj.id};
                return rep;
            }
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            RationalPoint p = intersect(A.lines[i], A.lines[j]);
            for (size_t k = j + 1; k < n; ++k)
                if (A.lines[k].contains(p)) {
                    rep.concurrent_triple = {A.lines[i].id, A.lines[j].id, A.lines[k].id};
                    rep.witness_point = p;
                    return rep;
                }
        }
    rep.ok = true;
    return rep;
}

namespace {

// parameter of p along l's direction (-b, a); only order matters
Rational param_along(const RationalLine& l, const RationalPoint& p) {
    return Rational(-l.b) * p.x + Rational(l.a) * p.y;
}

} // namespace

CrossingProfile crossing_profile(const LineArrangement& A) {
    auto rep = is_simple(A);
    if (!rep.ok) throw std::invalid_argument("crossing_profile requires a simple arrangement");
    CrossingProfile cp;
    const size_t n = A.lines.size();
    std::map<std::pair<int, int>, size_t> index_of;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            RationalPoint p = intersect(A.lines[i], A.lines[j]);
            int id1 = A.lines[i].id, id2 = A.lines[j].id;
            if (id1 > id2) std::swap(id1, id2);
            index_of[{id1, id2}] = cp.points.size();
            cp.points.push_back(p);
            cp.line_pairs.emplace_back(id1, id2);
        }
    std::vector<int> extreme_count(cp.points.size(), 0);
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::pair<Rational, size_t>> on_line;
        for (size_t v = 0; v < cp.points.size(); ++v) {
            const auto& [id1, id2] = cp.line_pairs[v];
            if (id1 == A.lines[i].id || id2 == A.lines[i].id)
                on_line.emplace_back(param_along(A.lines[i], cp.points[v]), v);
        }
        std::sort(on_line.begin(), on_line.end());
        if (!on_line.empty()) {
            extreme_count[on_line.front().second]++;
            extreme_count[on_line.back().second]++;
            if (on_line.size() == 1) extreme_count[on_line.front().second] = 2;
        }
    }
    cp.degrees.resize(cp.points.size());
    for (size_t v = 0; v < cp.points.size(); ++v)
        cp.degrees[v] = 4 - extreme_count[v];
    return cp;
}

std::vector<int> degree_multiset(const LineArrangement& A) {
    auto cp = crossing_profile(A);
    std::vector<int> d = cp.degrees;
    std::sort(d.rbegin(), d.rend());
    return d;
}

namespace {

Rational approx_rational(double v, long den) {
    return Rational(BigInt(std::llround(v * static_cast<double>(den))), BigInt(den));
}

std::vector<int> with_deltas(std::vector<int> ms, int d2_delta, int d3_delta, int d4_delta) {
    auto apply = [&](int deg, int delta) {
        if (delta > 0) {
            for (int i = 0; i < delta; ++i) ms.push_back(deg);
        } else {
            for (int i = 0; i < -delta; ++i) {
                auto it = std::find(ms.begin(), ms.end(), deg);
                if (it == ms.end()) throw std::logic_error("degree delta underflow");
                ms.erase(it);
            }
        }
    };
    apply(2, d2_delta);
    apply(3, d3_delta);
    apply(4, d4_delta);
    std::sort(ms.rbegin(), ms.rend());
    return ms;
}

} // namespace

LineArrangement star_construction(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("star_construction needs odd m >= 3");
    const int h = (m - 1) / 2;
    for (int attempt = 0; attempt < 24; ++attempt) {
        long den = 1024L << attempt;
        // points near the corners of a regular m-gon, in ccw cyclic order,
        // forced onto the unit circle via the tangent half-angle map
        std::vector<Rational> t(m);
        bool increasing = true;
        for (int i = 0; i < m; ++i) {
            double theta = -M_PI + (2.0 * i + 1.0) * M_PI / m;
            t[i] = approx_rational(std::tan(theta / 2.0), den);
            if (i > 0 && t[i] <= t[i - 1]) increasing = false;
        }
        if (!increasing) continue;
        std::vector<RationalPoint> pts(m);
        for (int i = 0; i < m; ++i) {
            Rational tt = t[i] * t[i];
            Rational denom = tt + 1;
            pts[i] = {(1 - tt) / denom, (2 * t[i]) / denom};
        }
        LineArrangement A;
        bool bad = false;
        for (int i = 0; i < m && !bad; ++i) {
            const auto& p = pts[i];
            const auto& q = pts[(i + h) % m];
            if (p == q) { bad = true; break; }
            A.lines.push_back(line_through(p, q, i + 1));
        }
        if (bad) continue;
        if (!is_simple(A).ok) continue;
        // chords of a circle in convex position: every crossing lies on or
        // inside the circle, so span extremes are exactly the m chosen points
        std::vector<int> expect;
        for (int i = 0; i < m * (m - 3) / 2; ++i) expect.push_back(4);
        for (int i = 0; i < m; ++i) expect.push_back(2);
        if (degree_multiset(A) != expect) continue;
        return A;
    }
    throw std::logic_error("star_construction failed to find a simple placement");
}

namespace {

struct VertexLookup {
    CrossingProfile cp;
    size_t find(std::pair<int, int> lines_pair) const {
        int a = std::min(lines_pair.first, lines_pair.second);
        int b = std::max(lines_pair.first, lines_pair.second);
        for (size_t v = 0; v < cp.line_pairs.size(); ++v)
            if (cp.line_pairs[v] == std::make_pair(a, b)) return v;
        throw std::invalid_argument("no crossing of lines " + std::to_string(a) + "," +
                                    std::to_string(b));
    }
};

// the degree-2 crossings of the arrangement, as profile indices
std::vector<size_t> degree2_vertices(const CrossingProfile& cp) {
    std::vector<size_t> out;
    for (size_t v = 0; v < cp.degrees.size(); ++v)
        if (cp.degrees[v] == 2) out.push_back(v);
    return out;
}

// far span endpoint of line `id`, excluding the crossing at `not_here`
RationalPoint far_extreme(const LineArrangement& A, const CrossingProfile& cp, int id,
                          const RationalPoint& not_here, size_t* index_out = nullptr) {
    const RationalLine& l = A.line_by_id(id);
    std::vector<std::pair<Rational, size_t>> on_line;
    for (size_t v = 0; v < cp.points.size(); ++v)
        if (cp.line_pairs[v].first == id || cp.line_pairs[v].second == id)
            on_line.emplace_back(param_along(l, cp.points[v]), v);
    std::sort(on_line.begin(), on_line.end());
    size_t lo = on_line.front().second, hi = on_line.back().second;
    size_t pick = (cp.points[lo] == not_here) ? hi : lo;
    if (index_out) *index_out = pick;
    return cp.points[pick];
}

} // namespace

LineArrangement pull_operation(const LineArrangement& A, std::pair<int, int> x_lines) {
    const int m = static_cast<int>(A.lines.size());
    if (m == 3)
        throw std::invalid_argument("pull_operation: m=3 has no line to pull past");
    if (m < 5 || m % 2 == 0)
        throw std::invalid_argument("pull_operation expects an odd star with m >= 5");
    VertexLookup lk{crossing_profile(A)};
    size_t xv = lk.find(x_lines);
    if (lk.cp.degrees[xv] != 2)
        throw std::invalid_argument("pull_operation: chosen crossing is not degree 2");

    const RationalPoint x = lk.cp.points[xv];
    int id1 = lk.cp.line_pairs[xv].first, id2 = lk.cp.line_pairs[xv].second;
    RationalPoint u = far_extreme(A, lk.cp, id1, x);
    RationalPoint v = far_extreme(A, lk.cp, id2, x);

    // centroid of the degree-2 crossings; interior target for the pull
    RationalPoint O{0, 0};
    auto d2s = degree2_vertices(lk.cp);
    for (size_t w : d2s) { O.x += lk.cp.points[w].x; O.y += lk.cp.points[w].y; }
    O.x /= static_cast<int>(d2s.size());
    O.y /= static_cast<int>(d2s.size());

    Rational dx = O.x - x.x, dy = O.y - x.y;
    std::vector<Rational> hits;
    for (const auto& l : A.lines) {
        if (l.id == id1 || l.id == id2) continue;
        Rational denom = Rational(l.a) * dx + Rational(l.b) * dy;
        if (denom == 0) continue;
        Rational s = (Rational(l.c) - Rational(l.a) * x.x - Rational(l.b) * x.y) / denom;
        if (s > 0 && s < 1) hits.push_back(s);
    }
    std::sort(hits.begin(), hits.end());
    if (hits.empty())
        throw std::logic_error("pull_operation: no line between the crossing and the centroid");
    Rational t1 = hits.front();
    Rational t2(1);
    for (const auto& s : hits)
        if (s > t1) { t2 = s; break; }

    std::vector<int> expect = with_deltas(degree_multiset(A), -1, +2, -1);
    Rational f(1, 2);
    for (int attempt = 0; attempt < 60; ++attempt, f /= 2) {
        Rational s = t1 + (t2 - t1) * f;
        RationalPoint xp{x.x + s * dx, x.y + s * dy};
        LineArrangement B = A;
        for (auto& l : B.lines) {
            if (l.id == id1) l = line_through(u, xp, id1);
            if (l.id == id2) l = line_through(v, xp, id2);
        }
        if (!is_simple(B).ok) continue;
        if (degree_multiset(B) != expect) continue;
        return B;
    }
    throw std::logic_error("pull_operation failed to validate after retries");
}

LineArrangement line_operation(const LineArrangement& A0, std::pair<int, int> x_lines, int k) {
    if (k < 0) throw std::invalid_argument("line_operation: k must be >= 0");
    LineArrangement A = A0;
    if (k == 0) return A;

    VertexLookup lk{crossing_profile(A)};
    size_t xv = lk.find(x_lines);
    if (lk.cp.degrees[xv] != 2)
        throw std::invalid_argument("line_operation: anchor crossing is not degree 2");
    const RationalPoint x = lk.cp.points[xv];
    int id1 = std::min(x_lines.first, x_lines.second);
    int id2 = std::max(x_lines.first, x_lines.second);
    size_t ui = 0, vi = 0;
    RationalPoint u = far_extreme(A, lk.cp, id1, x, &ui);
    RationalPoint v = far_extreme(A, lk.cp, id2, x, &vi);
    if (lk.cp.degrees[ui] != 2 || lk.cp.degrees[vi] != 2)
        throw std::invalid_argument("line_operation: anchor span-end partners must be degree 2");

    // v's second line carries the landing points for every added line
    auto [va, vb] = lk.cp.line_pairs[vi];
    int id3 = (va == id2) ? vb : va;
    const RationalLine l3 = A.line_by_id(id3);
    // neighbor of v along that line
    std::vector<std::pair<Rational, RationalPoint>> on3;
    for (size_t w = 0; w < lk.cp.points.size(); ++w)
        if (lk.cp.line_pairs[w].first == id3 || lk.cp.line_pairs[w].second == id3)
            on3.emplace_back(param_along(l3, lk.cp.points[w]), lk.cp.points[w]);
    auto by_param = [](const auto& a, const auto& b) { return a.first < b.first; };
    std::sort(on3.begin(), on3.end(), by_param);
    RationalPoint w0 = (on3.front().second == v) ? on3[1].second : on3[on3.size() - 2].second;

    Rational prev_frac(1); // sentinel above every later fraction
    for (int i = 0; i < k; ++i) {
        auto cp = crossing_profile(A);
        const RationalLine& l1 = A.line_by_id(id1);
        // crossings along l1, ordered outward on x's side (away from u)
        std::vector<std::pair<Rational, RationalPoint>> on1;
        for (size_t w = 0; w < cp.points.size(); ++w)
            if (cp.line_pairs[w].first == id1 || cp.line_pairs[w].second == id1)
                on1.emplace_back(param_along(l1, cp.points[w]), cp.points[w]);
        std::sort(on1.begin(), on1.end(), by_param);
        bool u_front = (on1.front().second == u);
        RationalPoint e = u_front ? on1.back().second : on1.front().second;
        RationalPoint c = u_front ? on1[on1.size() - 2].second : on1[1].second;

        Rational want(1, i + 2);
        if (want >= prev_frac) want = prev_frac / 2;

        int fours = static_cast<int>(A.lines.size()) - 2;
        std::vector<int> expect = with_deltas(degree_multiset(A), 0, +2, fours);
        int next_id = A.max_id() + 1;

        bool done = false;
        Rational g(1, 2), phi = want;
        for (int attempt = 0; attempt < 60; ++attempt, g /= 2, phi /= 2) {
            RationalPoint p1{e.x + (e.x - c.x) * g, e.y + (e.y - c.y) * g};
            RationalPoint p3{v.x + (w0.x - v.x) * phi, v.y + (w0.y - v.y) * phi};
            LineArrangement B = A;
            B.lines.push_back(line_through(p1, p3, next_id));
            if (!is_simple(B).ok) continue;
            if (degree_multiset(B) != expect) continue;
            A = std::move(B);
            prev_frac = phi;
            done = true;
            break;
        }
        if (!done) throw std::logic_error("line_operation failed to validate after retries");
    }
    return A;
}

} // namespace arrgraph
