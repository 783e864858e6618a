#pragma once

// Exact integer and rational types used throughout. All filtration values and
// Smith normal form computations stay in arbitrary precision; floating point
// appears only in the contact-geometry verification module.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfh {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

// Parses "p", "-p/q" style strings. Throws std::invalid_argument on garbage.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

}  // namespace gfh
