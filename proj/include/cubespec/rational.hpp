#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cubespec {

// Exact arithmetic for operator assembly and rank computation.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// n/2 as an exact rational (distance weights are half-integers).
inline Rational half_int(long long n) { return Rational(n, 2); }

}  // namespace cubespec
