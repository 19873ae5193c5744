#include "arrgraph/realizer.hpp"

#include "arrgraph/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrgraph {

DegreeSequence::DegreeSequence(std::vector<int> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("degree sequence must be nonempty");
    for (int d : entries)
        if (d < 1) throw std::invalid_argument("degree entries must be >= 1");
    std::sort(entries.rbegin(), entries.rend());
}

int DegreeSequence::count_of(int d) const {
    return static_cast<int>(std::count(entries.begin(), entries.end(), d));
}

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::NOT_234_DEGREES: return "NOT_234_DEGREES";
        case RejectReason::COUNT_IDENTITY_FAIL: return "COUNT_IDENTITY_FAIL";
        case RejectReason::D2_RANGE: return "D2_RANGE";
        case RejectReason::PARITY: return "PARITY";
    }
    return "?";
}

CheckResult check_sequence(const DegreeSequence& pi) {
    CheckResult res;
    for (int d : pi.entries)
        if (d < 2 || d > 4) {
            res.reason = RejectReason::NOT_234_DEGREES;
            res.detail = "entry " + std::to_string(d) + " outside {2,3,4}";
            return res;
        }
    const int d2 = pi.count_of(2), d3 = pi.count_of(3), d4 = pi.count_of(4);
    if (d3 % 2 != 0) {
        res.reason = RejectReason::COUNT_IDENTITY_FAIL;
        res.detail = "odd number of degree-3 entries";
        return res;
    }
    const int n = d2 + d3 / 2; // forced by 2*d2 + d3 = 2n
    if (n < 3) {
        res.reason = RejectReason::COUNT_IDENTITY_FAIL;
        res.detail = "sequence too small for 3 lines";
        return res;
    }
    if (2 * d4 != n * (n - 5) + 2 * d2) {
        res.reason = RejectReason::COUNT_IDENTITY_FAIL;
        res.detail = "degree-4 count is " + std::to_string(d4) + ", need " +
                     std::to_string(n * (n - 5) / 2 + d2) + " for n=" + std::to_string(n);
        return res;
    }
    if (d2 < 3) {
        res.reason = RejectReason::D2_RANGE;
        res.detail = "only " + std::to_string(d2) + " degree-2 entries, need at least 3";
        return res;
    }
    if (d2 == n && n % 2 == 0) {
        res.reason = RejectReason::PARITY;
        res.detail = "all span ends free (d2 = n) forces odd n, got n=" + std::to_string(n);
        return res;
    }

    RealizationPlan plan;
    plan.n = n;
    plan.d2 = d2;
    plan.d3 = d3;
    plan.d4 = d4;
    plan.even_branch = (d2 % 2 == 0);
    plan.star_m = plan.even_branch ? d2 + 1 : d2;
    plan.line_ops = n - plan.star_m;
    res.plan = plan;
    res.detail = "n=" + std::to_string(n);
    return res;
}

namespace {

// all degree-2 crossings as (line id pair), sorted
std::vector<std::pair<int, int>> two_vertices(const LineArrangement& A) {
    auto cp = crossing_profile(A);
    std::vector<std::pair<int, int>> out;
    for (size_t v = 0; v < cp.degrees.size(); ++v)
        if (cp.degrees[v] == 2) out.push_back(cp.line_pairs[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// degree-2 crossings whose span-end partners on both lines are degree 2
std::vector<std::pair<int, int>> anchor_candidates(const LineArrangement& A) {
    auto cp = crossing_profile(A);
    std::vector<std::pair<int, int>> out;
    auto line_order = [&](int id) {
        const RationalLine& l = A.line_by_id(id);
        std::vector<std::pair<Rational, size_t>> on;
        for (size_t v = 0; v < cp.points.size(); ++v)
            if (cp.line_pairs[v].first == id || cp.line_pairs[v].second == id)
                on.emplace_back(Rational(-l.b) * cp.points[v].x + Rational(l.a) * cp.points[v].y,
                                v);
        std::sort(on.begin(), on.end());
        return on;
    };
    for (size_t v = 0; v < cp.degrees.size(); ++v) {
        if (cp.degrees[v] != 2) continue;
        bool ok = true;
        for (int id : {cp.line_pairs[v].first, cp.line_pairs[v].second}) {
            auto on = line_order(id);
            size_t far = (on.front().second == v) ? on.back().second : on.front().second;
            if (cp.degrees[far] != 2) ok = false;
        }
        if (ok) out.push_back(cp.line_pairs[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

LineArrangement realize(const RealizationPlan& plan) {
    if (plan.n < 3 || plan.d2 < 3 || plan.d3 != 2 * (plan.n - plan.d2) ||
        2 * plan.d4 != plan.n * (plan.n - 5) + 2 * plan.d2 ||
        (plan.d2 == plan.n && plan.n % 2 == 0))
        throw std::invalid_argument("realize: plan fails the acceptance arithmetic");

    LineArrangement A = star_construction(plan.star_m);
    if (plan.even_branch) {
        auto tv = two_vertices(A);
        A = pull_operation(A, tv.front());
    }
    if (plan.line_ops > 0) {
        auto cand = anchor_candidates(A);
        if (cand.empty()) throw std::logic_error("realize: no anchor for line operations");
        A = line_operation(A, cand.front(), plan.line_ops);
    }

    std::vector<int> want;
    for (int i = 0; i < plan.d4; ++i) want.push_back(4);
    for (int i = 0; i < plan.d3; ++i) want.push_back(3);
    for (int i = 0; i < plan.d2; ++i) want.push_back(2);
    if (degree_multiset(A) != want)
        throw std::logic_error("realize: constructed arrangement has the wrong degrees");
    return A;
}

std::vector<RealizationPlan> all_plans_up_to(int n_max) {
    std::vector<RealizationPlan> out;
    for (int n = 3; n <= n_max; ++n)
        for (int d2 = 3; d2 <= n; ++d2) {
            if (d2 == n && n % 2 == 0) continue;
            RealizationPlan p;
            p.n = n;
            p.d2 = d2;
            p.d3 = 2 * (n - d2);
            p.d4 = n * (n - 5) / 2 + d2;
            p.even_branch = (d2 % 2 == 0);
            p.star_m = p.even_branch ? d2 + 1 : d2;
            p.line_ops = n - p.star_m;
            out.push_back(p);
        }
    return out;
}

} // namespace arrgraph
