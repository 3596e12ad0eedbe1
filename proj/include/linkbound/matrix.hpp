#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "linkbound/laurent.hpp"
#include "linkbound/numeric.hpp"
#include "linkbound/polynomial.hpp"

namespace Eigen {
template <class S>
struct NumTraits<linkbound::Polynomial<S>> : GenericNumTraits<linkbound::Polynomial<S>> {
  using Real = linkbound::Polynomial<S>;
  using NonInteger = linkbound::Polynomial<S>;
  using Literal = linkbound::Polynomial<S>;
  using Nested = linkbound::Polynomial<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};
template <class S>
struct NumTraits<linkbound::LaurentPoly<S>> : GenericNumTraits<linkbound::LaurentPoly<S>> {
  using Real = linkbound::LaurentPoly<S>;
  using NonInteger = linkbound::LaurentPoly<S>;
  using Literal = linkbound::LaurentPoly<S>;
  using Nested = linkbound::LaurentPoly<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
};
}  // namespace Eigen

namespace linkbound {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Integer>;
using IntVector = DenseVector<Integer>;
using RationalMatrix = DenseMatrix<Rational>;
using LaurentMatrix = DenseMatrix<Laurent>;

/// Matrix of a given shape filled with copies of `value`. Eigen's Zero()
/// relies on Scalar(0) which not every exact scalar provides meaningfully.
template <class Scalar>
DenseMatrix<Scalar> filled(Eigen::Index rows, Eigen::Index cols, const Scalar& value) {
  DenseMatrix<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = value;
  return m;
}

inline Integer exact_quotient(const Integer& a, const Integer& b) { return a / b; }
inline PolyZ exact_quotient(const PolyZ& a, const PolyZ& b) { return exact_divide(a, b); }

inline bool is_zero_entry(const Integer& a) { return a == 0; }
inline bool is_zero_entry(const Rational& a) { return a == 0; }
template <class S>
bool is_zero_entry(const Polynomial<S>& a) {
  return a.is_zero();
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Requires exact division in the scalar ring.
template <class Ring>
Ring bareiss_determinant(DenseMatrix<Ring> m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Ring(1);
  Ring previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && is_zero_entry(m(pivot, k))) ++pivot;
    if (pivot == n) return Ring(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      }
    }
    previous = m(k, k);
  }
  return negate ? Ring(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Rank over the fraction field by fraction-free elimination.
template <class Ring>
int fraction_free_rank(DenseMatrix<Ring> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Ring previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && is_zero_entry(m(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(r).swap(m.row(pivot));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = exact_quotient(m(r, c) * m(i, j) - m(i, c) * m(r, j), previous);
      }
      m(i, c) = Ring(0);
    }
    previous = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

/// Nonzero elementary divisors (Smith normal form diagonal) of an integer
/// matrix, in divisibility order, all positive.
std::vector<Integer> elementary_divisors(IntMatrix m);

/// Diagonal entries d_1..d_n of a matrix over Q[t] equivalent to `m` under
/// invertible row and column operations over Q[t]. Zero entries mark the
/// corank. Each nonzero entry is monic.
std::vector<PolyQ> polynomial_diagonal_form(DenseMatrix<PolyQ> m);

/// Entrywise conversion; `m` times t^shift must have polynomial entries.
DenseMatrix<PolyZ> to_polynomial_matrix(const LaurentMatrix& m, int shift);

/// Smallest exponent appearing in any entry (0 for an all-zero matrix).
int min_exponent(const LaurentMatrix& m);

IntMatrix transpose(const IntMatrix& m);

}  // namespace linkbound
