#pragma once

// Reference computations for the tests. Each one takes a different route
// from the library code it checks.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "linkbound/braid.hpp"
#include "linkbound/laurent.hpp"
#include "linkbound/seifert.hpp"

namespace oracle {

using linkbound::Integer;
using linkbound::Laurent;

using LaurentGrid = std::vector<std::vector<Laurent>>;

// Cofactor expansion along the first row.
inline Laurent laplace_determinant(const LaurentGrid& m) {
  const std::size_t n = m.size();
  if (n == 0) return Laurent(1);
  if (n == 1) return m[0][0];
  Laurent acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    LaurentGrid minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Laurent> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    Laurent term = m[0][j] * laplace_determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// det(tV - V^T) by cofactor expansion.
inline Laurent seifert_determinant(const linkbound::IntMatrix& v) {
  const auto n = static_cast<std::size_t>(v.rows());
  const Laurent t = Laurent::t();
  LaurentGrid m(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = t * Laurent(v(Eigen::Index(i), Eigen::Index(j))) - Laurent(v(Eigen::Index(j), Eigen::Index(i)));
    }
  }
  return laplace_determinant(m);
}

// Alexander polynomial of a closed braid knot from the unreduced Burau
// representation: the (n-1) x (n-1) leading minor of I - psi(beta).
inline Laurent burau_alexander(const linkbound::BraidWord& b) {
  const std::size_t n = static_cast<std::size_t>(b.strands);
  const Laurent t = Laurent::t();
  const Laurent tinv = Laurent::monomial(Integer(1), -1);
  LaurentGrid m(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Laurent(1);
  for (int letter : b.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
    Laurent a, c, d, e;  // 2x2 block [[a, c], [d, e]] at rows/cols i, i+1
    if (letter > 0) {
      a = Laurent(1) - t;
      c = t;
      d = Laurent(1);
      e = Laurent();
    } else {
      a = Laurent();
      c = Laurent(1);
      d = tinv;
      e = Laurent(1) - tinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Laurent x = m[r][i];
      Laurent y = m[r][i + 1];
      m[r][i] = x * a + y * d;
      m[r][i + 1] = x * c + y * e;
    }
  }
  LaurentGrid minor(n - 1, std::vector<Laurent>(n - 1));
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = 0; c + 1 < n; ++c) minor[r][c] = Laurent(r == c ? 1 : 0) - m[r][c];
  }
  return laplace_determinant(minor);
}

struct Eigencount {
  int sigma = 0;
  int nullity = 0;
};

// Signature of B(z) = (1 - z) V + (1 - conj z) V^T at z = e^{i theta}, from
// the eigenvalues of the real symmetric 2n x 2n matrix [[Re, -Im], [Im, Re]],
// whose spectrum is that of B(z) with every eigenvalue doubled.
inline Eigencount circle_signature(const linkbound::IntMatrix& v, double theta, double tol = 1e-9) {
  const Eigen::Index n = v.rows();
  if (n == 0) return {};
  const std::complex<double> z = std::polar(1.0, theta);
  Eigen::MatrixXd re(n, n), im(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::complex<double> b = (1.0 - z) * v(i, j).convert_to<double>() +
                               (1.0 - std::conj(z)) * v(j, i).convert_to<double>();
      re(i, j) = b.real();
      im(i, j) = b.imag();
    }
  }
  Eigen::MatrixXd big(2 * n, 2 * n);
  big << re, -im, im, re;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(big, Eigen::EigenvaluesOnly);
  int pos = 0, neg = 0, zero = 0;
  for (Eigen::Index k = 0; k < 2 * n; ++k) {
    double ev = es.eigenvalues()(k);
    if (std::abs(ev) <= tol) {
      ++zero;
    } else if (ev > 0) {
      ++pos;
    } else {
      ++neg;
    }
  }
  return {(pos - neg) / 2, zero / 2};
}

// Real roots of an integer polynomial (coefficients lowest first) from the
// eigenvalues of its companion matrix.
inline std::vector<double> companion_real_roots(const std::vector<long>& c, double imag_tol = 1e-7) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<double> out;
  if (d < 1) return out;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -static_cast<double>(c[std::size_t(i)]) / double(c.back());
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (int i = 0; i < d; ++i) {
    auto ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) < imag_tol) out.push_back(ev.real());
  }
  return out;
}

}  // namespace oracle
