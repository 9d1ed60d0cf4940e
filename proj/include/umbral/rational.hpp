#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace umbral {

// Exact arithmetic foundation.  Rationals are kept canonical by the backend:
// always reduced, denominator positive.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);

// "p/q" with q omitted when it equals 1.  Round-trips exactly.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

int sign_of(const Rational& q);

} // namespace umbral
