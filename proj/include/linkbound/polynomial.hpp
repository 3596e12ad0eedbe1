#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "linkbound/numeric.hpp"

namespace linkbound {

/// Dense univariate polynomial over an exact scalar. Coefficients are stored
/// lowest degree first with no trailing zeros, so the zero polynomial has an
/// empty coefficient vector and degree -1.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  Polynomial(const Scalar& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  Polynomial(int c) : Polynomial(Scalar(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial monomial(const Scalar& c, int degree) {
    if (c == 0) return {};
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  const Scalar& leading() const { return coeffs_.back(); }

  /// Horner evaluation in any type the coefficients convert into.
  template <class R>
  R operator()(const R& at) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + R(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
    }
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Coefficients in reverse order: x^deg p(1/x).
  Polynomial reversed() const {
    std::vector<Scalar> r(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(r));
  }

  /// Divides every coefficient by `c` (exactly, for integer scalars).
  Polynomial divided_by(const Scalar& c) const {
    Polynomial r = *this;
    for (auto& v : r.coeffs_) v /= c;
    return r;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using PolyZ = Polynomial<Integer>;
using PolyQ = Polynomial<Rational>;

/// Quotient and remainder over a field.
inline std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw ZeroPolynomialError("polynomial division");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {PolyQ(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(dq) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] / lb;
    quo[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
  }
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

inline PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

/// Monic scaling over a field.
inline PolyQ monic(const PolyQ& p) {
  if (p.is_zero()) return p;
  return p.divided_by(p.leading());
}

/// Monic greatest common divisor over the rationals; gcd(0,0) = 0.
inline PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Exact division in Z[x]; throws when `b` does not divide `a`.
inline PolyZ exact_divide(const PolyZ& a, const PolyZ& b) {
  if (b.is_zero()) throw ZeroPolynomialError("exact division");
  if (a.is_zero()) return {};
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) throw std::domain_error("exact_divide: inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(static_cast<std::size_t>(dq) + 1, Integer(0));
  const Integer& lb = b.leading();
  for (int k = dq; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (top % lb != 0) throw std::domain_error("exact_divide: inexact polynomial division");
    Integer c = top / lb;
    quo[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("exact_divide: inexact polynomial division");
  }
  return PolyZ(std::move(quo));
}

/// True when `b` divides `a` in Z[x].
inline bool divides(const PolyZ& b, const PolyZ& a) {
  try {
    (void)exact_divide(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

inline Integer content(const PolyZ& p) {
  Integer g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

/// Primitive part with positive leading coefficient.
inline PolyZ primitive_part(const PolyZ& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (p.leading().sign() < 0) c = -c;
  return p.divided_by(c);
}

inline PolyQ to_rational(const PolyZ& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return PolyQ(std::move(v));
}

/// Clears denominators and returns the primitive integer polynomial with
/// positive leading coefficient having the same roots.
inline PolyZ to_primitive_integer(const PolyQ& p) {
  if (p.is_zero()) return {};
  Integer l(1);
  for (const auto& c : p.coeffs()) {
    Integer d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(numerator(c) * (l / denominator(c)));
  return primitive_part(PolyZ(std::move(v)));
}

/// Square-free part (product of the distinct irreducible factors).
inline PolyZ square_free_part(const PolyZ& p) {
  if (p.is_zero()) throw ZeroPolynomialError("square_free_part");
  if (p.degree() < 1) return PolyZ(1);
  PolyQ q = to_rational(p);
  PolyQ g = gcd(q, q.derivative());
  return to_primitive_integer(divmod(q, g).first);
}

/// Yun's square-free decomposition: p = c * prod f_k^k with each f_k
/// square-free, primitive and pairwise coprime. Entries with constant f_k are
/// omitted.
inline std::vector<std::pair<PolyZ, int>> square_free_decomposition(const PolyZ& p) {
  if (p.is_zero()) throw ZeroPolynomialError("square_free_decomposition");
  std::vector<std::pair<PolyZ, int>> out;
  if (p.degree() < 1) return out;
  PolyQ a = to_rational(p);
  PolyQ b = gcd(a, a.derivative());
  PolyQ c = divmod(a, b).first;
  PolyQ d = divmod(a.derivative(), b).first - c.derivative();
  int k = 1;
  while (c.degree() > 0) {
    PolyQ f = gcd(c, d);
    if (f.degree() > 0) out.emplace_back(to_primitive_integer(f), k);
    c = divmod(c, f).first;
    d = divmod(d, f).first - c.derivative();
    ++k;
  }
  return out;
}

namespace detail {
inline std::string power_term(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

/// Shared pretty printer for (exponent, coefficient) pairs in descending
/// exponent order.
template <class Scalar>
std::string format_terms(const std::vector<std::pair<int, Scalar>>& terms,
                         const std::string& var) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    bool negative = c < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string m = power_term(var, e);
    if (m.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag);
      out += m;
    }
  }
  return out;
}
}  // namespace detail

template <class Scalar>
std::string to_string(const Polynomial<Scalar>& p, const std::string& var = "x") {
  std::vector<std::pair<int, Scalar>> terms;
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coeff(k) != 0) terms.emplace_back(k, p.coeff(k));
  }
  return detail::format_terms(terms, var);
}

}  // namespace linkbound
