#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arrgraph {

struct ArrangementGraph; // graph.hpp

// Wiring diagram of n pseudolines: wires enter at levels 1..n (1 = bottom,
// wire w starts at level w) and each step swaps the wires at levels
// (swaps[t], swaps[t]+1).  A valid diagram has every pair of wires crossing
// exactly once, so it holds n(n-1)/2 swaps and reverses the wire order.
struct WiringDiagram {
    int n = 0;
    std::vector<int> swaps; // 1-based levels, length n(n-1)/2 when valid

    bool operator==(const WiringDiagram&) const = default;
};

struct WiringViolation {
    int step = 0; // 1-based step index, 0 for structural problems
    std::string what;
};

struct WiringValidation {
    bool ok = false;
    std::vector<WiringViolation> issues;
};

WiringValidation validate(const WiringDiagram& d);

// Wire levels over time. levels[t] maps level-1 .. level-n (index 0..n-1) to
// the wire occupying it just before step t+1; levels[m] is the final order.
struct SweepState {
    int n = 0;
    std::vector<std::vector<int>> levels;

    // level of wire w (1-based) just before 1-based step t fires
    int level_of(int wire, int step) const;
};

SweepState sweep(const WiringDiagram& d); // pre: valid

struct EnumerateOptions {
    bool allow_n6 = false; // n=6 walks 292864 diagrams, opt in explicitly
};

// Emits every valid diagram on n wires in lexicographic swap order.  Return
// false from the callback to stop early.
void enumerate_all(int n, const std::function<bool(const WiringDiagram&)>& yield,
                   const EnumerateOptions& opts = {});

std::vector<WiringDiagram> enumerate_all(int n, const EnumerateOptions& opts = {});

// Re-sweeps the arrangement from an unbounded face bounded by only two
// pseudolines, so the resulting diagram has exactly one swap at level 1, and
// that crossing is a degree-2 vertex distinct from the first and last
// crossings.  pre: g has at least one such face (always true for n >= 3).
WiringDiagram restricted_sweep(const ArrangementGraph& g);

} // namespace arrgraph
