#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgut {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using ExactScalar = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                   boost::multiprecision::et_off>;

/// C(n, k), zero when k < 0 or k > n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline ExactScalar rpow(const ExactScalar& base, unsigned exp) {
  ExactScalar r = 1;
  ExactScalar b = base;
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline ExactScalar ratio(const Integer& num, const Integer& den) {
  return ExactScalar(num, den);
}

/// "num/den", den omitted when it is 1.
inline std::string to_exact_string(const ExactScalar& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_exact_string(const Integer& x) { return x.str(); }

/// Parses the "num/den" form written by to_exact_string.
inline ExactScalar parse_exact(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return ExactScalar(Integer(s));
  return ExactScalar(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

/// Returns the exact rational square root when x is a square of a rational.
inline bool exact_sqrt(const ExactScalar& x, ExactScalar& root) {
  if (x < 0) return false;
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = ExactScalar(rn, rd);
  return true;
}

namespace detail {

inline std::string format_scaled(Integer scaled, unsigned digits, bool negative) {
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace detail

/// Decimal rendering truncated toward zero after `digits` fractional digits.
inline std::string to_decimal(const ExactScalar& x, unsigned digits) {
  const bool negative = x < 0;
  const ExactScalar a = negative ? ExactScalar(-x) : x;
  const Integer scale = ipow(10, digits);
  const Integer scaled =
      boost::multiprecision::numerator(a) * scale / boost::multiprecision::denominator(a);
  return detail::format_scaled(scaled, digits, negative && scaled != 0);
}

/// Decimal rendering of sqrt(x) for x >= 0, truncated after `digits` digits.
inline std::string sqrt_to_decimal(const ExactScalar& x, unsigned digits) {
  const Integer scale = ipow(10, 2 * digits);
  const Integer scaled = boost::multiprecision::numerator(x) * scale /
                         boost::multiprecision::denominator(x);
  return detail::format_scaled(boost::multiprecision::sqrt(scaled), digits, false);
}

}  // namespace sgut
