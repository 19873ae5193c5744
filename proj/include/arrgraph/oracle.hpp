#pragma once

#include "arrgraph/realizer.hpp"
#include "arrgraph/wiring.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arrgraph {

struct ArrangementGraph;

// One checkable statement about arrangements.  Per-instance claims run on
// every enumerated diagram up to max_n; aggregate claims run once per n over
// the whole enumeration (degree census, 2-switch witness).
struct ClaimInfo {
    std::string id;
    std::string description;
    bool aggregate = false;
    int max_n = 5; // expensive claims cap here; cheap ones allow 6
};

const std::vector<ClaimInfo>& claim_registry();

struct ClaimFailure {
    std::string claim;
    int n = 0;
    WiringDiagram witness; // replayable instance (empty for aggregate claims)
    std::string detail;
};

struct VerificationRun {
    int n_max = 0;
    std::vector<std::string> claims;          // ids actually run
    std::map<int, long> instances_per_n;      // enumerated diagrams per n
    long total_instances = 0;
    std::vector<ClaimFailure> failures;
    std::vector<std::string> notes;           // skips, warnings

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    bool allow_n6 = false;
    std::vector<std::string> claims; // empty = all

    // stop recording failures for a claim after this many (still counted)
    int max_failures_per_claim = 16;
};

// Runs the selected claims over every diagram with 3 <= n <= n_max.
// Deterministic: identical inputs give identical runs.
VerificationRun verify_all(int n_max, const VerifyOptions& opts = {});

// Sorted set of distinct degree sequences over all diagrams on n wires.
std::vector<std::vector<int>> degree_sequence_census(int n, bool allow_n6 = false);

// The accepted-side prediction for the census, from the arithmetic criterion.
std::vector<std::vector<int>> predicted_census(int n);

// Degree sequence of the crossing graph straight from the diagram, without
// building the graph.  Matches degree_sequence_of(build_from_wiring(d)).
std::vector<int> wiring_degree_sequence(const WiringDiagram& d);

// An edge exchange on an n=4 arrangement graph that leaves the class: the
// result is isomorphic to no arrangement graph on 4 pseudolines.
struct TwoSwitchWitness {
    WiringDiagram diagram;
    std::pair<int, int> xy, zw; // vertex indices in build_from_wiring order
};

std::optional<TwoSwitchWitness> find_two_switch_witness();

} // namespace arrgraph
