#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>
#include <string_view>

namespace latmeans {

/// Arbitrary-precision exact rational scalar used for golden tests.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Throws InvalidArgument on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print as "p/1" so the format is uniform.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

// Scalar helpers shared by the double and exact-rational instantiations.
inline bool is_finite_scalar(double x) { return std::isfinite(x); }
inline bool is_finite_scalar(const Rational&) { return true; }

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace latmeans
