#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "stlyap/error.hpp"

namespace stlyap {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// p/q in lowest terms; cpp_rational's two-argument constructor rejects
/// negative denominators.
inline Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) fail(ErrorKind::InvalidInput, "zero denominator");
  return Rational(p) / Rational(q);
}

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = gcd(a, b);
  Integer l = a / g * b;
  return l < 0 ? Integer(-l) : l;
}

/// Floor division for arbitrary signs (cpp_int `/` truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

struct ExtendedGcd {
  Integer g, x, y;  // g = a*x + b*y
};

inline ExtendedGcd extended_gcd(Integer a, Integer b) {
  Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Integer q = floor_div(a, b);
    Integer r = a - q * b;
    a = b;
    b = r;
    Integer nx = x0 - q * x1;
    Integer ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

/// Exact "p/q" rendering; integers print without a denominator.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline bool fits_int64(const Integer& z) {
  return z >= std::numeric_limits<std::int64_t>::min() &&
         z <= std::numeric_limits<std::int64_t>::max();
}

/// Parses "p/q", "p" or "-p/q" into lowest terms.
inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    return make_rational(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  }
}

}  // namespace stlyap
