#pragma once

#include "arrgraph/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrgraph {

// Degree multiset kept sorted non-increasing; entries >= 1.
struct DegreeSequence {
    std::vector<int> entries;

    explicit DegreeSequence(std::vector<int> e);
    DegreeSequence() = default;

    int count_of(int d) const;
    int total() const { return static_cast<int>(entries.size()); }
    bool operator==(const DegreeSequence&) const = default;
};

enum class RejectReason {
    NOT_234_DEGREES,     // an entry outside {2,3,4}
    COUNT_IDENTITY_FAIL, // counts violate the forced size identities
    D2_RANGE,            // fewer than 3 degree-2 entries
    PARITY,              // d2 = n with n even
};

std::string to_string(RejectReason r);

struct RealizationPlan {
    int n = 0;
    int d2 = 0, d3 = 0, d4 = 0;
    bool even_branch = false; // d2 even: star(d2+1) + pull + line ops
    int star_m = 0;           // size of the initial star
    int line_ops = 0;         // k additional lines
};

struct CheckResult {
    std::optional<RealizationPlan> plan;    // set iff accepted
    std::optional<RejectReason> reason;     // set iff rejected
    std::string detail;

    bool accepted() const { return plan.has_value(); }
};

// Decides realizability as the degree sequence of a simple arrangement of n
// lines: pi = <4^d4, 3^d3, 2^d2> with d3 = 2(n - d2), d4 = n(n-5)/2 + d2,
// 3 <= d2 <= n, and d2 = n only for odd n.
CheckResult check_sequence(const DegreeSequence& pi);

// Constructs a simple arrangement whose crossing degrees realize the plan:
// star for odd d2, star + pull for even d2, then line operations.
LineArrangement realize(const RealizationPlan& plan);

// Every accepted plan with 3 <= n <= n_max, ordered by (n, d2).
std::vector<RealizationPlan> all_plans_up_to(int n_max);

} // namespace arrgraph
