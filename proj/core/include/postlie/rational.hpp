#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace postlie {

/// Exact rational coefficient: arbitrary-precision integers, always in
/// lowest terms. Every identity in the combinatorial layer is checked with
/// operator== on these, never with a tolerance.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

inline std::string numerator_string(const Rational& q) { return numerator(q).str(); }
inline std::string denominator_string(const Rational& q) { return denominator(q).str(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace postlie
