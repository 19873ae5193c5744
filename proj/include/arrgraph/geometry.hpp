#pragma once

#include "arrgraph/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arrgraph {

struct RationalPoint {
    Rational x, y;

    bool operator==(const RationalPoint&) const = default;
};

// a*x + b*y = c with integer coefficients, gcd(a,b,c) = 1, and the first
// nonzero of (a,b) positive.  id identifies the line across operations.
struct RationalLine {
    BigInt a, b, c;
    int id = 0;

    void normalize();
    bool contains(const RationalPoint& p) const;
    // evaluation sign of a*x + b*y - c; fixes the two sides of the line
    int side(const RationalPoint& p) const;
};

RationalLine line_through(const RationalPoint& p, const RationalPoint& q, int id);

struct parallel_lines_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

RationalPoint intersect(const RationalLine& l1, const RationalLine& l2);

struct LineArrangement {
    std::vector<RationalLine> lines;

    const RationalLine& line_by_id(int id) const;
    int max_id() const;
};

struct SimplicityReport {
    bool ok = false;
    // set when !ok: either a parallel pair or a concurrent triple (line ids)
    std::optional<std::pair<int, int>> parallel_pair;
    std::optional<std::array<int, 3>> concurrent_triple;
    std::optional<RationalPoint> witness_point;
};

SimplicityReport is_simple(const LineArrangement& A);

// Crossings of one line sorted along the line, with extreme-ness flags.
// Degree of a crossing = 4 - (number of lines it is extreme on).
struct CrossingProfile {
    std::vector<RationalPoint> points;          // all crossings, arbitrary order
    std::vector<std::pair<int, int>> line_pairs; // matching ids, id1 < id2
    std::vector<int> degrees;
};

CrossingProfile crossing_profile(const LineArrangement& A); // pre: simple

std::vector<int> degree_multiset(const LineArrangement& A); // sorted descending

// m pairwise-crossing chords of a circle: rational points near the corners of
// a regular m-gon, chord i+1 joins point i to point i + (m-1)/2 (mod m).
// pre: m odd, m >= 3.  Every chord crosses every other and no three meet.
LineArrangement star_construction(int m);

// Replaces the two lines through the degree-2 vertex x so they instead meet at
// a point x' strictly inside the arrangement, past exactly one other line.
// x is named by its (unordered) line id pair.  pre: A is a star with m >= 5.
LineArrangement pull_operation(const LineArrangement& A, std::pair<int, int> x_lines);

// Adds k lines anchored at the degree-2 vertex x (line pair x_lines, both of
// x's span-end partners must also be degree-2).  Each new line crosses one of
// x's lines beyond its current extreme and every other line, landing near the
// far partner.  pre: A is a star construction or a star followed by one pull.
LineArrangement line_operation(const LineArrangement& A, std::pair<int, int> x_lines, int k);

} // namespace arrgraph
