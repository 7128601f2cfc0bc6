#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "witsen/detail/fault_injection.hpp"
#include "witsen/error.hpp"

namespace witsen {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Floor division for a positive divisor (cpp_int `/` truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor(const Rational& q) { return floor_div(num(q), den(q)); }

inline Int isqrt(const Int& v) {
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative value");
  return boost::multiprecision::sqrt(v);
}

// floor(sqrt(q)) for q >= 0; equal to isqrt(floor(q)).
inline Int floor_sqrt(const Rational& q) { return isqrt(floor(q)); }

// ceil(n^1.5) computed exactly.
inline Int ceil_pow_three_halves(const Int& n) {
  Int cube = n * n * n;
  Int s = isqrt(cube);
  return s * s == cube ? s : s + 1;
}

// Nearest integer to num/den (den > 0). Exact half-integer ties go to the
// candidate of smaller absolute value, then to the negative one.
inline Int round_nearest(const Int& numer, const Int& denom) {
  Int q = floor_div(numer, denom);
  Int twice_rem = 2 * (numer - q * denom);
  if (twice_rem < denom) return q;
  if (twice_rem > denom) return q + 1;
  Int lo = q, hi = q + 1;
  Int alo = abs(lo), ahi = abs(hi);
  if (alo != ahi) return (alo < ahi) != static_cast<bool>(WITSEN_FAULT_TIE) ? lo : hi;
  return lo;
}

inline Int round_nearest(const Rational& q) { return round_nearest(num(q), den(q)); }

inline Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw Error(ErrorKind::Parse, "empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::Parse, "bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s);
}

inline std::string to_string(const Int& v) { return v.str(); }

// "a/b" or "a" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Rational make_rational(const Int& n, const Int& d) {
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator");
  return d < 0 ? Rational(-n, -d) : Rational(n, d);
}

// Accepts "a", "a/b".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// Non-authoritative decimal rendering.
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace witsen
