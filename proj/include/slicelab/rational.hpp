#pragma once

/// Exact scalar arithmetic used throughout the geometric pipeline.
///
/// Rational is an arbitrary-precision fraction kept in lowest terms with a
/// positive denominator; every coordinate, coefficient and area below is one.
/// No routine in the geometry ever rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace slicelab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "7", "-3/4" -> Rational. Whitespace is not accepted.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" form, plain "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

double to_double(const Rational& r);

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }
inline int sign(const Int& n) { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

}  // namespace slicelab
