#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace takiff {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  return Rational(Integer(num), Integer(den));
}

// Scalar glue so algebra code can run over exact rationals or doubles.
template <class S> struct ScalarOps;

template <> struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational from_int(long v) { return Rational(v); }
};

template <> struct ScalarOps<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x) { return x == 0.0; }
  static double from_int(long v) { return static_cast<double>(v); }
};

}  // namespace takiff
