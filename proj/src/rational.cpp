#include "arrgraph/rational.hpp"

#include <stdexcept>

namespace arrgraph {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    return make_rational(num, den);
}

} // namespace arrgraph
