#include <doctest.h>

#include "arrgraph/realizer.hpp"

#include <map>
#include <vector>

using namespace arrgraph;

namespace {

DegreeSequence seq(int d4, int d3, int d2) {
    std::vector<int> e;
    e.insert(e.end(), d4, 4);
    e.insert(e.end(), d3, 3);
    e.insert(e.end(), d2, 2);
    return DegreeSequence(e);
}

} // namespace

TEST_SUITE("realizer") {

TEST_CASE("degree sequences sort descending and reject junk") {
    DegreeSequence d({2, 4, 3, 2});
    CHECK(d.entries == std::vector<int>{4, 3, 2, 2});
    CHECK(d.count_of(2) == 2);
    CHECK(d.count_of(3) == 1);
    CHECK(d.count_of(7) == 0);
    CHECK(d.total() == 4);

    CHECK_THROWS_AS(DegreeSequence(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({3, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSequence({-1}), std::invalid_argument);
}

TEST_CASE("accepted plans carry the full arithmetic") {
    auto r = check_sequence(seq(0, 0, 3)); // triangle
    REQUIRE(r.accepted());
    CHECK(r.plan->n == 3);
    CHECK(r.plan->d2 == 3);
    CHECK(r.plan->d3 == 0);
    CHECK(r.plan->d4 == 0);
    CHECK_FALSE(r.plan->even_branch);
    CHECK(r.plan->star_m == 3);
    CHECK(r.plan->line_ops == 0);

    r = check_sequence(seq(1, 2, 3)); // n=4
    REQUIRE(r.accepted());
    CHECK(r.plan->n == 4);
    CHECK(r.plan->star_m == 3);
    CHECK(r.plan->line_ops == 1);

    r = check_sequence(seq(5, 0, 5)); // the 5-star itself
    REQUIRE(r.accepted());
    CHECK(r.plan->n == 5);
    CHECK_FALSE(r.plan->even_branch);
    CHECK(r.plan->star_m == 5);
    CHECK(r.plan->line_ops == 0);

    r = check_sequence(seq(4, 2, 4)); // even d2 goes through a pull
    REQUIRE(r.accepted());
    CHECK(r.plan->n == 5);
    CHECK(r.plan->even_branch);
    CHECK(r.plan->star_m == 5);
    CHECK(r.plan->line_ops == 0);

    r = check_sequence(seq(7, 4, 4)); // even d2 with line operations
    REQUIRE(r.accepted());
    CHECK(r.plan->n == 6);
    CHECK(r.plan->even_branch);
    CHECK(r.plan->star_m == 5);
    CHECK(r.plan->line_ops == 1);
}

TEST_CASE("rejections name the violated rule") {
    auto r = check_sequence(DegreeSequence({5, 2, 2}));
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::NOT_234_DEGREES);

    r = check_sequence(DegreeSequence({1, 1, 1}));
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::NOT_234_DEGREES);

    r = check_sequence(seq(0, 1, 3)); // odd number of 3s
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::COUNT_IDENTITY_FAIL);

    r = check_sequence(seq(0, 0, 2)); // n = 2 < 3
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::COUNT_IDENTITY_FAIL);

    r = check_sequence(seq(1, 0, 3)); // wrong number of 4s for n = 3
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::COUNT_IDENTITY_FAIL);

    r = check_sequence(seq(2, 6, 2)); // arithmetic fine but only two 2s
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::D2_RANGE);

    r = check_sequence(seq(2, 0, 4)); // d2 = n with n even
    REQUIRE_FALSE(r.accepted());
    CHECK(*r.reason == RejectReason::PARITY);

    CHECK(to_string(RejectReason::NOT_234_DEGREES) == "NOT_234_DEGREES");
    CHECK(to_string(RejectReason::COUNT_IDENTITY_FAIL) == "COUNT_IDENTITY_FAIL");
    CHECK(to_string(RejectReason::D2_RANGE) == "D2_RANGE");
    CHECK(to_string(RejectReason::PARITY) == "PARITY");
}

TEST_CASE("plan table up to n = 9") {
    auto plans = all_plans_up_to(9);
    CHECK(plans.size() == 25);

    std::map<int, int> per_n;
    for (const auto& p : plans) {
        per_n[p.n]++;
        CHECK(p.d2 >= 3);
        CHECK(p.d2 <= p.n);
        if (p.d2 == p.n) CHECK(p.n % 2 == 1);
        CHECK(p.d3 == 2 * (p.n - p.d2));
        CHECK(2 * p.d4 == p.n * (p.n - 5) + 2 * p.d2);
        CHECK(p.even_branch == (p.d2 % 2 == 0));
        CHECK(p.star_m == (p.even_branch ? p.d2 + 1 : p.d2));
        CHECK(p.n == p.star_m + p.line_ops);

        // round trip through the checker reproduces the plan
        auto r = check_sequence(seq(p.d4, p.d3, p.d2));
        REQUIRE(r.accepted());
        CHECK(r.plan->n == p.n);
        CHECK(r.plan->d2 == p.d2);
    }
    CHECK(per_n == std::map<int, int>{{3, 1}, {4, 1}, {5, 3}, {6, 3}, {7, 5}, {8, 5}, {9, 7}});
}

TEST_CASE("realize hits the requested degrees exactly") {
    for (const auto& p : all_plans_up_to(7)) {
        LineArrangement A = realize(p);
        REQUIRE(A.lines.size() == static_cast<size_t>(p.n));
        CHECK(is_simple(A).ok);
        DegreeSequence got(degree_multiset(A));
        CHECK(got == seq(p.d4, p.d3, p.d2));
    }
}

TEST_CASE("realize is deterministic") {
    auto r = check_sequence(seq(4, 2, 4));
    REQUIRE(r.accepted());
    LineArrangement a = realize(*r.plan), b = realize(*r.plan);
    REQUIRE(a.lines.size() == b.lines.size());
    for (size_t i = 0; i < a.lines.size(); ++i) {
        CHECK(a.lines[i].a == b.lines[i].a);
        CHECK(a.lines[i].b == b.lines[i].b);
        CHECK(a.lines[i].c == b.lines[i].c);
    }
}

} // TEST_SUITE
