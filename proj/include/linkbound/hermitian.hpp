#pragma once

#include <vector>

#include "linkbound/matrix.hpp"
#include "linkbound/quad_field.hpp"
#include "linkbound/seifert.hpp"

namespace linkbound {

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const { return positive - negative; }
  int rank() const { return positive + negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a hermitian matrix over an exact field with involution
/// (Rational with the trivial involution, or QuadFieldElem), by congruence
/// diagonalization A -> P A P^*.
template <class Scalar>
Inertia hermitian_inertia(DenseMatrix<Scalar> a) {
  const Eigen::Index n = a.rows();
  Inertia out;
  auto swap_index = [&a](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && is_zero(a(p, p))) ++p;
    if (p == n) {
      // Zero diagonal: build a nonzero one from an off-diagonal entry,
      // e_i -> e_i + a_ij e_j gives a new diagonal 2|a_ij|^2.
      Eigen::Index bi = -1;
      Eigen::Index bj = -1;
      for (Eigen::Index i = k; i < n && bi < 0; ++i) {
        for (Eigen::Index j = k; j < n; ++j) {
          if (i != j && !is_zero(a(i, j))) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi < 0) break;  // the remaining block is zero
      Scalar c = a(bi, bj);
      for (Eigen::Index j = 0; j < n; ++j) a(bi, j) = a(bi, j) + c * a(bj, j);
      Scalar cc = conj(c);
      for (Eigen::Index i = 0; i < n; ++i) a(i, bi) = a(i, bi) + cc * a(i, bj);
      p = bi;
    }
    swap_index(k, p);
    const Scalar pivot = a(k, k);
    if (real_sign(pivot) > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (is_zero(a(r, k))) continue;
      Scalar f = a(r, k) / pivot;
      for (Eigen::Index j = k; j < n; ++j) a(r, j) = a(r, j) - f * a(k, j);
      Scalar fc = conj(f);
      for (Eigen::Index i = k; i < n; ++i) a(i, r) = a(i, r) - fc * a(i, k);
    }
  }
  out.zero = static_cast<int>(n) - out.positive - out.negative;
  return out;
}

/// Square matrix over Z[t, t^-1] with A_ji = involution(A_ij).
class HermitianFamily {
 public:
  HermitianFamily() = default;
  explicit HermitianFamily(LaurentMatrix a);

  const LaurentMatrix& matrix() const { return a_; }
  int size() const { return static_cast<int>(a_.rows()); }

 private:
  LaurentMatrix a_ = LaurentMatrix(0, 0);
};

/// B(t) = (1 - t) V + (1 - t^-1) V^T.
HermitianFamily b_family(const SeifertData& v);

/// Determinant over Z[t, t^-1].
Laurent determinant(const LaurentMatrix& m);

/// det of the leading k x k blocks, k = 1..n. Each is symmetric under
/// t -> t^-1.
std::vector<Laurent> leading_principal_minors(const HermitianFamily& a);

/// A(z) for z = e^{i theta} with x = 2 cos theta rational in (-2, 2).
DenseMatrix<QuadFieldElem> evaluate_on_circle(const HermitianFamily& a, const Rational& x);

/// A(1) or A(-1), real symmetric.
RationalMatrix evaluate_at_real_point(const HermitianFamily& a, int z);

}  // namespace linkbound
