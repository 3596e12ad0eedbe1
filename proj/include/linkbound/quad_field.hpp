#pragma once

#include <stdexcept>

#include <Eigen/Core>

#include "linkbound/numeric.hpp"

namespace linkbound {

/// Element a + b z of Q(z) with z^2 = x z - 1 for a rational x in (-2, 2):
/// z = e^{i theta} with x = 2 cos theta, and conj(z) = z^-1 = x - z.
/// Pure rationals (b = 0) carry no meaningful context and combine with
/// elements of any context.
class QuadFieldElem {
 public:
  QuadFieldElem() = default;
  QuadFieldElem(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadFieldElem(int a) : a_(a) {}              // NOLINT
  QuadFieldElem(Rational a, Rational b, Rational x) : a_(std::move(a)), b_(std::move(b)), x_(std::move(x)) {
    if (!(x_ > -2 && x_ < 2)) throw std::domain_error("QuadFieldElem: context x must lie in (-2, 2)");
  }

  /// The generator z itself.
  static QuadFieldElem z(const Rational& x) { return {Rational(0), Rational(1), x}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& context() const { return x_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_real() const { return b_ == 0; }

  QuadFieldElem conj() const { return make(a_ + b_ * x_, -b_, x_); }

  /// a^2 + a b x + b^2 = |a + b z|^2, positive for nonzero elements.
  Rational norm() const { return a_ * a_ + a_ * b_ * x_ + b_ * b_; }

  QuadFieldElem inverse() const {
    if (is_zero()) throw std::domain_error("QuadFieldElem: division by zero");
    Rational n = norm();
    QuadFieldElem c = conj();
    return make(c.a_ / n, c.b_ / n, x_);
  }

  QuadFieldElem operator-() const { return make(-a_, -b_, x_); }
  friend QuadFieldElem operator+(const QuadFieldElem& p, const QuadFieldElem& q) {
    return make(p.a_ + q.a_, p.b_ + q.b_, shared(p, q));
  }
  friend QuadFieldElem operator-(const QuadFieldElem& p, const QuadFieldElem& q) { return p + (-q); }
  friend QuadFieldElem operator*(const QuadFieldElem& p, const QuadFieldElem& q) {
    Rational x = shared(p, q);
    // (a + bz)(c + dz) = (ac - bd) + (ad + bc + bdx) z
    Rational bd = p.b_ * q.b_;
    return make(p.a_ * q.a_ - bd, p.a_ * q.b_ + p.b_ * q.a_ + bd * x, x);
  }
  friend QuadFieldElem operator/(const QuadFieldElem& p, const QuadFieldElem& q) { return p * q.inverse(); }
  QuadFieldElem& operator+=(const QuadFieldElem& q) { return *this = *this + q; }
  QuadFieldElem& operator-=(const QuadFieldElem& q) { return *this = *this - q; }
  QuadFieldElem& operator*=(const QuadFieldElem& q) { return *this = *this * q; }

  friend bool operator==(const QuadFieldElem& p, const QuadFieldElem& q) {
    return p.a_ == q.a_ && p.b_ == q.b_ && (p.b_ == 0 || p.x_ == q.x_);
  }
  friend bool operator!=(const QuadFieldElem& p, const QuadFieldElem& q) { return !(p == q); }

 private:
  static QuadFieldElem make(Rational a, Rational b, Rational x) {
    QuadFieldElem r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    r.x_ = std::move(x);
    return r;
  }
  static Rational shared(const QuadFieldElem& p, const QuadFieldElem& q) {
    if (p.b_ != 0 && q.b_ != 0 && p.x_ != q.x_) {
      throw std::domain_error("QuadFieldElem: mixing elements of different fields");
    }
    return p.b_ != 0 ? p.x_ : q.x_;
  }

  Rational a_{0};
  Rational b_{0};
  Rational x_{0};
};

// Uniform scalar interface used by the hermitian congruence routine.
inline Rational conj(const Rational& r) { return r; }
inline QuadFieldElem conj(const QuadFieldElem& q) { return q.conj(); }
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const QuadFieldElem& q) { return q.is_zero(); }
/// Sign of a self-conjugate scalar.
inline int real_sign(const Rational& r) { return sign(r); }
inline int real_sign(const QuadFieldElem& q) {
  if (!q.is_real()) throw std::logic_error("real_sign: element is not self-conjugate");
  return sign(q.a());
}

}  // namespace linkbound

namespace Eigen {
template <>
struct NumTraits<linkbound::QuadFieldElem> : GenericNumTraits<linkbound::QuadFieldElem> {
  using Real = linkbound::QuadFieldElem;
  using NonInteger = linkbound::QuadFieldElem;
  using Literal = linkbound::QuadFieldElem;
  using Nested = linkbound::QuadFieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
};
}  // namespace Eigen
