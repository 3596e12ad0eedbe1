#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkbound/numeric.hpp"
#include "linkbound/polynomial.hpp"

namespace linkbound {

/// Laurent polynomial in t with exact coefficients, the ring Z[t, t^-1]
/// (or Q[t, t^-1]) with involution t -> t^-1.
///
/// Stored as a dense coefficient run starting at `min_exponent()`; both ends
/// of the run are nonzero, so no zero coefficient is ever stored outside the
/// run and the zero polynomial is the empty run.
template <class Scalar>
class LaurentPoly {
 public:
  using scalar_type = Scalar;

  LaurentPoly() = default;
  LaurentPoly(const Scalar& c) : LaurentPoly(monomial(c, 0)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Scalar(c)) {}                 // NOLINT
  LaurentPoly(int min_exponent, std::vector<Scalar> coeffs)
      : low_(min_exponent), coeffs_(std::move(coeffs)) {
    trim();
  }

  static LaurentPoly monomial(const Scalar& c, int exponent) {
    return LaurentPoly(exponent, std::vector<Scalar>{c});
  }
  static LaurentPoly t() { return monomial(Scalar(1), 1); }

  static LaurentPoly from_terms(const std::map<int, Scalar>& terms) {
    LaurentPoly r;
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
  }
  static LaurentPoly from_polynomial(const Polynomial<Scalar>& p, int shift = 0) {
    return LaurentPoly(shift, p.coeffs());
  }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(int e) const {
    if (is_zero() || e < low_ || e > max_exponent()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }

  /// Nonzero terms keyed by exponent.
  std::map<int, Scalar> terms() const {
    std::map<int, Scalar> m;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) m.emplace(low_ + static_cast<int>(k), coeffs_[k]);
    }
    return m;
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }

  /// The polynomial t^(-min_exponent) * p as an ordinary polynomial.
  Polynomial<Scalar> to_polynomial() const { return Polynomial<Scalar>(coeffs_); }

  /// Evaluation at an element of any ring holding t and t^-1.
  template <class R>
  R evaluate(const R& t_value, const R& t_inverse) const {
    if (is_zero()) return R(0);
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t_value + R(*it);
    R unit(1);
    const R& step = low_ >= 0 ? t_value : t_inverse;
    for (int k = 0; k < (low_ >= 0 ? low_ : -low_); ++k) unit = unit * step;
    return acc * unit;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(max_exponent(), o.max_exponent());
    std::vector<Scalar> v(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + static_cast<std::size_t>(low_ - lo)] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) v[k + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[k];
    low_ = lo;
    coeffs_ = std::move(v);
    trim();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial<Scalar> prod = a.to_polynomial() * b.to_polynomial();
    return from_polynomial(prod, a.low_ + b.low_);
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<Scalar> coeffs_;
};

using Laurent = LaurentPoly<Integer>;
using LaurentQ = LaurentPoly<Rational>;

/// Coefficient of t^k becomes the coefficient of t^-k.
template <class Scalar>
LaurentPoly<Scalar> involution(const LaurentPoly<Scalar>& p) {
  if (p.is_zero()) return p;
  std::vector<Scalar> v(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentPoly<Scalar>(-p.max_exponent(), std::move(v));
}

/// max exponent - min exponent; unchanged by units +-t^k.
template <class Scalar>
int width(const LaurentPoly<Scalar>& p) {
  if (p.is_zero()) throw ZeroPolynomialError("width");
  return p.max_exponent() - p.min_exponent();
}

/// Canonical representative modulo units +-t^k: minimum exponent zero and
/// positive leading coefficient.
template <class Scalar>
LaurentPoly<Scalar> normalize(const LaurentPoly<Scalar>& p) {
  if (p.is_zero()) throw ZeroPolynomialError("normalize");
  LaurentPoly<Scalar> r = p.shifted(-p.min_exponent());
  if (r.coeffs().back() < 0) r = -r;
  return r;
}

/// Equality up to multiplication by a unit +-t^k.
template <class Scalar>
bool equal_up_to_units(const LaurentPoly<Scalar>& a, const LaurentPoly<Scalar>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize(a) == normalize(b);
}

template <class Scalar>
bool is_symmetric(const LaurentPoly<Scalar>& p) {
  return p == involution(p);
}

namespace detail {
/// L_k(x) = t^k + t^-k written in x = t + t^-1 (L_0 = 2, L_1 = x).
template <class Scalar>
std::vector<Polynomial<Scalar>> lucas_table(int n) {
  std::vector<Polynomial<Scalar>> table;
  table.emplace_back(Scalar(2));
  if (n >= 1) table.push_back(Polynomial<Scalar>::x());
  for (int k = 2; k <= n; ++k) {
    table.push_back(Polynomial<Scalar>::x() * table[static_cast<std::size_t>(k - 1)] -
                    table[static_cast<std::size_t>(k - 2)]);
  }
  return table;
}
}  // namespace detail

/// Rewrites a symmetric Laurent polynomial p(t) = p(t^-1) as a polynomial
/// in x = t + t^-1. Integer coefficients stay integral.
template <class Scalar>
Polynomial<Scalar> symmetric_to_x(const LaurentPoly<Scalar>& p) {
  if (!is_symmetric(p)) throw std::invalid_argument("symmetric_to_x: polynomial is not symmetric");
  if (p.is_zero()) return {};
  int top = p.max_exponent();
  auto lucas = detail::lucas_table<Scalar>(top);
  Polynomial<Scalar> out(p.coeff(0));
  for (int k = 1; k <= top; ++k) {
    Scalar c = p.coeff(k);
    if (c != 0) out += Polynomial<Scalar>(c) * lucas[static_cast<std::size_t>(k)];
  }
  return out;
}

/// Inverse of `symmetric_to_x`.
template <class Scalar>
LaurentPoly<Scalar> x_to_symmetric(const Polynomial<Scalar>& q) {
  LaurentPoly<Scalar> x = LaurentPoly<Scalar>::t() + LaurentPoly<Scalar>::monomial(Scalar(1), -1);
  LaurentPoly<Scalar> acc;
  for (int k = q.degree(); k >= 0; --k) acc = acc * x + LaurentPoly<Scalar>(q.coeff(k));
  return acc;
}

template <class Scalar>
std::string to_string(const LaurentPoly<Scalar>& p, const std::string& var = "t") {
  std::vector<std::pair<int, Scalar>> terms;
  for (int e = p.max_exponent(); !p.is_zero() && e >= p.min_exponent(); --e) {
    if (p.coeff(e) != 0) terms.emplace_back(e, p.coeff(e));
  }
  return detail::format_terms(terms, var);
}

/// Parses sums of terms like "2t^2-5t+2", "t^-1 + 3", "-t^{-2}". Coefficients
/// may be separated from the variable by '*'.
Laurent parse_laurent(const std::string& text, char var = 't');

}  // namespace linkbound
