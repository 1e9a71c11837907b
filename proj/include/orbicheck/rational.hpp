#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orbicheck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/** "3", "-7/2"; denominators of 1 are omitted. */
inline std::string rat_str(const Rational& q) {
    return q.str();
}

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

} // namespace orbicheck
