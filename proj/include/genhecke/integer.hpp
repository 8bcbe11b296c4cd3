#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "genhecke/errors.hpp"

namespace genhecke {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool scalar_is_zero(const Integer& a) { return a.is_zero(); }
inline bool scalar_is_zero(const Rational& a) { return a.is_zero(); }
inline std::string scalar_str(const Integer& a) { return a.str(); }
inline std::string scalar_str(const Rational& a) { return a.str(); }

// Coefficients that print with a leading sign can be written "-c" instead of "+(-c)".
inline bool scalar_is_negative(const Integer& a) { return a.sign() < 0; }
inline bool scalar_is_negative(const Rational& a) { return a.sign() < 0; }
// "atomic" coefficients need no parentheses when followed by "*monomial".
inline bool scalar_is_atomic(const Integer&) { return true; }
inline bool scalar_is_atomic(const Rational& a) { return boost::multiprecision::denominator(a) == 1; }

inline Integer ipow(Integer b, unsigned e) {
  Integer r = 1;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline Integer parse_integer(const std::string& s) {
  if (s.empty()) fail(ErrorKind::ParseError, "empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(ErrorKind::ParseError, "bad integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') fail(ErrorKind::ParseError, "bad integer '" + s + "'");
  return Integer(s);
}

inline int small_int(const Integer& a) {
  if (a > 1000000000 || a < -1000000000) fail(ErrorKind::BoundExceeded, "integer too large");
  return a.convert_to<int>();
}

}  // namespace genhecke
