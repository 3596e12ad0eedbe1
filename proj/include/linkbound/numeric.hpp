#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace linkbound {

// Expression templates are disabled so that these types behave as plain
// value types inside Eigen matrices and generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Raised by operations that are undefined on the zero polynomial.
class ZeroPolynomialError : public std::domain_error {
 public:
  explicit ZeroPolynomialError(const std::string& what)
      : std::domain_error(what + ": zero polynomial") {}
};

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }
inline int sign(long long v) { return (v > 0) - (v < 0); }

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline Integer abs(const Integer& v) { return v.sign() < 0 ? Integer(-v) : v; }
inline Rational abs(const Rational& v) {
  return v.sign() < 0 ? Rational(-v) : v;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Floor of a rational.
inline Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n.sign() < 0 && f * d != n) f -= 1;
  return f;
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

/// Integer square root if `v` is a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& v) {
  if (v.sign() < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(v);
  if (r * r == v) return r;
  return std::nullopt;
}

inline bool fits_int64(const Integer& v) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  return v >= lo && v <= hi;
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer n(text.substr(0, slash));
    Integer d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Integer& v) { return v.convert_to<double>(); }

}  // namespace linkbound
