#include "linkbound/hermitian.hpp"

namespace linkbound {

HermitianFamily::HermitianFamily(LaurentMatrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw std::invalid_argument("HermitianFamily: matrix must be square");
  for (Eigen::Index i = 0; i < a_.rows(); ++i) {
    for (Eigen::Index j = i; j < a_.cols(); ++j) {
      if (a_(j, i) != involution(a_(i, j))) {
        throw std::invalid_argument("HermitianFamily: entry (" + std::to_string(j) + "," +
                                    std::to_string(i) + ") is not the involution of (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

HermitianFamily b_family(const SeifertData& v) {
  const Eigen::Index n = v.size();
  const Laurent one_minus_t = Laurent(1) - Laurent::t();
  const Laurent one_minus_tinv = involution(one_minus_t);
  LaurentMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = one_minus_t * Laurent(v.matrix()(i, j)) + one_minus_tinv * Laurent(v.matrix()(j, i));
    }
  }
  return HermitianFamily(std::move(b));
}

Laurent determinant(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Laurent(1);
  int shift = -min_exponent(m);
  PolyZ d = bareiss_determinant<PolyZ>(to_polynomial_matrix(m, shift));
  return Laurent::from_polynomial(d, -shift * static_cast<int>(n));
}

std::vector<Laurent> leading_principal_minors(const HermitianFamily& a) {
  std::vector<Laurent> out;
  for (Eigen::Index k = 1; k <= a.size(); ++k) {
    out.push_back(determinant(a.matrix().topLeftCorner(k, k)));
  }
  return out;
}

DenseMatrix<QuadFieldElem> evaluate_on_circle(const HermitianFamily& a, const Rational& x) {
  int lo = min_exponent(a.matrix());
  int hi = 0;
  for (Eigen::Index i = 0; i < a.matrix().rows(); ++i)
    for (Eigen::Index j = 0; j < a.matrix().cols(); ++j)
      if (!a.matrix()(i, j).is_zero()) hi = std::max(hi, a.matrix()(i, j).max_exponent());
  lo = std::min(lo, 0);
  // powers[k - lo] = z^k
  std::vector<QuadFieldElem> powers(static_cast<std::size_t>(hi - lo + 1));
  const QuadFieldElem z = QuadFieldElem::z(x);
  const QuadFieldElem zinv = z.conj();
  powers[static_cast<std::size_t>(-lo)] = QuadFieldElem(1);
  for (int k = 1; k <= hi; ++k) powers[static_cast<std::size_t>(k - lo)] = powers[static_cast<std::size_t>(k - 1 - lo)] * z;
  for (int k = -1; k >= lo; --k) powers[static_cast<std::size_t>(k - lo)] = powers[static_cast<std::size_t>(k + 1 - lo)] * zinv;

  DenseMatrix<QuadFieldElem> out(a.size(), a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < a.size(); ++j) {
      QuadFieldElem acc(0);
      for (const auto& [e, c] : a.matrix()(i, j).terms()) {
        acc += QuadFieldElem(Rational(c)) * powers[static_cast<std::size_t>(e - lo)];
      }
      out(i, j) = acc;
    }
  }
  return out;
}

RationalMatrix evaluate_at_real_point(const HermitianFamily& a, int z) {
  if (z != 1 && z != -1) throw std::invalid_argument("evaluate_at_real_point: z must be +1 or -1");
  RationalMatrix out(a.size(), a.size());
  const Integer zv(z);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < a.size(); ++j) {
      out(i, j) = Rational(a.matrix()(i, j).evaluate(zv, zv));
    }
  }
  return out;
}

}  // namespace linkbound
