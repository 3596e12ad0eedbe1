#include "linkbound/matrix.hpp"

#include <algorithm>

namespace linkbound {
namespace {

// Euclidean-domain helpers so one diagonalization routine serves Z and Q[t].
struct IntegerDomain {
  using T = Integer;
  static bool zero(const T& a) { return a == 0; }
  static bool smaller(const T& a, const T& b) { return abs(a) < abs(b); }
  static std::pair<T, T> divmod(const T& a, const T& b) {
    T q = a / b;
    return {q, a - q * b};
  }
};

struct PolynomialDomain {
  using T = PolyQ;
  static bool zero(const T& a) { return a.is_zero(); }
  static bool smaller(const T& a, const T& b) { return a.degree() < b.degree(); }
  static std::pair<T, T> divmod(const T& a, const T& b) { return linkbound::divmod(a, b); }
};

template <class Domain>
std::vector<typename Domain::T> diagonalize(DenseMatrix<typename Domain::T> m) {
  using T = typename Domain::T;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<T> diag;
  for (Eigen::Index k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      Eigen::Index bi = -1;
      Eigen::Index bj = -1;
      for (Eigen::Index i = k; i < rows; ++i) {
        for (Eigen::Index j = k; j < cols; ++j) {
          if (Domain::zero(m(i, j))) continue;
          if (bi < 0 || Domain::smaller(m(i, j), m(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) {
        for (Eigen::Index r = k; r < std::min(rows, cols); ++r) diag.push_back(T(0));
        return diag;
      }
      m.row(k).swap(m.row(bi));
      m.col(k).swap(m.col(bj));
      bool clean = true;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (Domain::zero(m(i, k))) continue;
        auto [q, r] = Domain::divmod(m(i, k), m(k, k));
        for (Eigen::Index j = k; j < cols; ++j) m(i, j) = m(i, j) - q * m(k, j);
        if (!Domain::zero(m(i, k))) clean = false;
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (Domain::zero(m(k, j))) continue;
        auto [q, r] = Domain::divmod(m(k, j), m(k, k));
        for (Eigen::Index i = k; i < rows; ++i) m(i, j) = m(i, j) - q * m(i, k);
        if (!Domain::zero(m(k, j))) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(m(k, k));
  }
  return diag;
}

}  // namespace

std::vector<Integer> elementary_divisors(IntMatrix m) {
  std::vector<Integer> diag = diagonalize<IntegerDomain>(std::move(m));
  std::vector<Integer> nz;
  for (const auto& d : diag) {
    if (d != 0) nz.push_back(abs(d));
  }
  // Restore the divisibility chain: (a, b) -> (gcd, lcm) keeps the product
  // and the module.
  for (std::size_t i = 0; i < nz.size(); ++i) {
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      Integer g = gcd(nz[i], nz[j]);
      Integer l = nz[i] / g * nz[j];
      nz[i] = g;
      nz[j] = l;
    }
  }
  return nz;
}

std::vector<PolyQ> polynomial_diagonal_form(DenseMatrix<PolyQ> m) {
  std::vector<PolyQ> diag = diagonalize<PolynomialDomain>(std::move(m));
  for (auto& d : diag) d = monic(d);
  return diag;
}

DenseMatrix<PolyZ> to_polynomial_matrix(const LaurentMatrix& m, int shift) {
  DenseMatrix<PolyZ> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Laurent e = m(i, j).shifted(shift);
      if (!e.is_zero() && e.min_exponent() < 0) {
        throw std::invalid_argument("to_polynomial_matrix: negative exponent after shift");
      }
      out(i, j) = e.is_zero() ? PolyZ()
                              : e.to_polynomial() * PolyZ::monomial(Integer(1), e.min_exponent());
    }
  }
  return out;
}

int min_exponent(const LaurentMatrix& m) {
  bool any = false;
  int lo = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (!any || m(i, j).min_exponent() < lo) lo = m(i, j).min_exponent();
      any = true;
    }
  }
  return lo;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

}  // namespace linkbound
