#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace arrgraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) {
    if (r < 0) return -1;
    if (r > 0) return 1;
    return 0;
}

inline int sign_of(const BigInt& v) {
    if (v < 0) return -1;
    if (v > 0) return 1;
    return 0;
}

// the two-argument cpp_rational constructor requires a positive denominator
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

// "p/q" with q omitted when 1; parse accepts both forms.
std::string to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

} // namespace arrgraph
