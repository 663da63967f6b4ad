#pragma once

// Exact arithmetic types shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fanoquot {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: denominator > 0 and gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  const BigInt den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace fanoquot
