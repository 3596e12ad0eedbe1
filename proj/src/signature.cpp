#include "linkbound/signature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace linkbound {
namespace {

const Rational kMinusTwo(-2);
const Rational kTwo(2);

PolyZ x_form(const Laurent& symmetric) { return symmetric_to_x(symmetric); }

// Strips factors of t from a polynomial with rational coefficients.
PolyQ strip_t(const PolyQ& p) {
  std::size_t k = 0;
  while (k < p.coeffs().size() && p.coeffs()[k] == 0) ++k;
  return PolyQ(std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
}

// x-form of t^-d e(t) e*(t), whose roots in (-2, 2) are the circle roots of e.
PolyZ circle_factor(const PolyQ& e) {
  const int d = e.degree();
  LaurentQ n = LaurentQ::from_polynomial(e * e.reversed(), -d);
  return to_primitive_integer(symmetric_to_x(n));
}

int jacobi_negatives(const std::vector<int>& signs) {
  int changes = 0;
  int prev = 1;
  for (int s : signs) {
    if (s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

CirclePoint CirclePoint::at(const Rational& x) {
  if (x < kMinusTwo || x > kTwo) {
    throw std::invalid_argument("circle point: x = " + to_string(x) + " lies outside [-2, 2]");
  }
  return CirclePoint(x);
}

CirclePoint CirclePoint::algebraic(PolyZ polynomial, IsolatingInterval interval) {
  if (polynomial.degree() < 1) throw std::invalid_argument("circle point: polynomial must be nonconstant");
  if (interval.exact) {
    if (polynomial(*interval.exact) != 0) throw std::invalid_argument("circle point: exact value is not a root");
    return at(*interval.exact);
  }
  if (!(interval.lo < interval.hi)) throw std::invalid_argument("circle point: empty interval");
  SturmSequence s(square_free_part(polynomial));
  if (s.count_open(interval.lo, interval.hi) != 1) {
    throw std::invalid_argument("circle point: interval does not isolate exactly one root");
  }
  for (const Rational& end : {kMinusTwo, kTwo}) {
    if (interval.contains(end) && polynomial(end) == 0) return at(end);
  }
  Rational lo = std::max(interval.lo, kMinusTwo);
  Rational hi = std::min(interval.hi, kTwo);
  if (!(lo < hi) || s.count_open(lo, hi) != 1) {
    throw std::invalid_argument("circle point: root lies outside [-2, 2]");
  }
  return CirclePoint(AlgebraicPoint{std::move(polynomial), std::move(interval)});
}

double approximate(const AlgebraicPoint& a) {
  return refine(a.polynomial, a.interval, Rational(1, 1L << 40)).approx();
}

double CirclePoint::approx() const { return is_rational() ? to_double(x()) : approximate(root()); }

double Breakpoint::approx() const { return approximate(location); }

int SignatureFunction::max_abs_sigma() const {
  int best = 0;
  for (const auto& iv : intervals) best = std::max(best, std::abs(iv.sigma));
  return best;
}

std::size_t SignatureFunction::witness_interval() const {
  const int best = max_abs_sigma();
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    if (std::abs(intervals[j].sigma) == best) return j;
  }
  return 0;
}

std::pair<double, double> SignatureFunction::interval_bounds(std::size_t j) const {
  double lo = j == 0 ? -2.0 : breakpoints[j - 1].approx();
  double hi = j == breakpoints.size() ? 2.0 : breakpoints[j].approx();
  return {lo, hi};
}

SignatureEngine::SignatureEngine(HermitianFamily family) : family_(std::move(family)) {
  const int n = family_.size();
  if (n == 0) {
    breakpoints_ = PolyZ(1);
    return;
  }
  for (const Laurent& m : leading_principal_minors(family_)) minors_.push_back(x_form(m));

  const LaurentMatrix& a = family_.matrix();
  DenseMatrix<PolyZ> shifted = to_polynomial_matrix(a, -min_exponent(a));
  DenseMatrix<PolyQ> over_q(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) over_q(i, j) = to_rational(shifted(i, j));
  for (const PolyQ& e : polynomial_diagonal_form(over_q)) {
    if (e.is_zero()) {
      ++generic_corank_;
      continue;
    }
    PolyQ core = strip_t(e);
    if (core.degree() >= 1) circle_factors_.push_back(circle_factor(core));
  }

  PolyZ d = minors_.back();
  singular_ = d.is_zero();
  if (singular_) {
    d = PolyZ(1);
    for (const PolyZ& c : circle_factors_) d = d * c;
  }
  breakpoints_ = d.degree() >= 1 ? square_free_part(d) : PolyZ(1);
}

bool SignatureEngine::minors_usable(const Rational& x) const {
  return std::all_of(minors_.begin(), minors_.end(), [&x](const PolyZ& m) { return m(x) != 0; });
}

Inertia SignatureEngine::inertia_at(const Rational& x) const {
  if (x < kMinusTwo || x > kTwo) throw std::invalid_argument("inertia_at: x outside [-2, 2]");
  const int n = family_.size();
  if (n == 0) return {};
  if (x == kMinusTwo || x == kTwo) {
    return hermitian_inertia(evaluate_at_real_point(family_, x == kTwo ? 1 : -1));
  }
  if (minors_usable(x)) {
    std::vector<int> signs;
    for (const PolyZ& m : minors_) signs.push_back(sign(m(x)));
    Inertia out;
    out.negative = jacobi_negatives(signs);
    out.positive = n - out.negative;
    return out;
  }
  return hermitian_inertia(evaluate_on_circle(family_, x));
}

Rational SignatureEngine::pick_sample(const Rational& lo, const Rational& hi) const {
  const Rational mid = (lo + hi) / 2;
  if (minors_usable(mid)) return mid;
  for (int depth = 2; depth <= 8; ++depth) {
    const long denom = 1L << depth;
    for (long k = 1; k < denom; k += 2) {
      Rational c = lo + (hi - lo) * Rational(k, denom);
      if (minors_usable(c)) return c;
    }
  }
  return mid;  // singular everywhere on the interval; diagonalization handles it
}

int SignatureEngine::breakpoint_nullity(const IsolatingInterval& iv) const {
  int nullity = generic_corank_;
  for (const PolyZ& e : circle_factors_) {
    if (has_root_in(e, iv)) ++nullity;
  }
  return nullity;
}

SignatureFunction SignatureEngine::signature_function() const {
  SignatureFunction f;
  f.size = family_.size();
  f.singular_family = singular_;
  f.breakpoint_polynomial = breakpoints_;

  std::vector<IsolatingInterval> roots;
  if (breakpoints_.degree() >= 1) roots = isolate_real_roots(breakpoints_, Window::open(kMinusTwo, kTwo));
  // Leave room for a sample strictly between neighbouring roots and the ends.
  for (std::size_t j = 0; j < roots.size(); ++j) {
    auto& iv = roots[j];
    while (!(iv.lo > kMinusTwo && iv.hi < kTwo)) iv = refine(breakpoints_, iv, iv.length() / 2);
    if (j > 0) {
      auto& prev = roots[j - 1];
      while (!(prev.hi < iv.lo)) {
        prev = refine(breakpoints_, prev, prev.length() / 2);
        iv = refine(breakpoints_, iv, iv.length() / 2);
      }
    }
  }

  for (std::size_t j = 0; j <= roots.size(); ++j) {
    const Rational lo = j == 0 ? kMinusTwo : roots[j - 1].hi;
    const Rational hi = j == roots.size() ? kTwo : roots[j].lo;
    SignatureInterval iv;
    iv.sample = pick_sample(lo, hi);
    Inertia in = inertia_at(iv.sample);
    iv.sigma = in.signature();
    iv.nullity = in.zero;
    f.intervals.push_back(iv);
  }

  for (std::size_t j = 0; j < roots.size(); ++j) {
    Breakpoint b;
    b.location = AlgebraicPoint{breakpoints_, roots[j]};
    b.left_sigma = f.intervals[j].sigma;
    b.right_sigma = f.intervals[j + 1].sigma;
    b.sigma = Rational(b.left_sigma + b.right_sigma, 2);
    b.nullity = breakpoint_nullity(roots[j]);
    if (roots[j].exact) {
      int direct = inertia_at(*roots[j].exact).zero;
      if (direct != b.nullity) {
        throw std::logic_error("internal inconsistency: nullity " + std::to_string(direct) + " at x = " +
                               to_string(*roots[j].exact) + " but diagonal form predicts " +
                               std::to_string(b.nullity));
      }
    }
    f.breakpoints.push_back(std::move(b));
  }

  Inertia at_minus = inertia_at(kMinusTwo);
  f.minus_two = {kMinusTwo, Rational(f.intervals.front().sigma), at_minus.signature(), at_minus.zero};
  Inertia at_plus = inertia_at(kTwo);
  f.plus_two = {kTwo, Rational(f.intervals.back().sigma), at_plus.signature(), at_plus.zero};
  return f;
}

SignatureValue SignatureEngine::value_at(const CirclePoint& p) const { return value_at(p, signature_function()); }

SignatureValue SignatureEngine::value_at(const CirclePoint& p, const SignatureFunction& f) const {
  if (family_.size() == 0) return {Rational(0), 0};
  const bool have_breakpoints = breakpoints_.degree() >= 1;

  if (p.is_rational()) {
    const Rational& x = p.x();
    if (x == kMinusTwo) return {f.minus_two.sigma, f.minus_two.nullity};
    if (x == kTwo) return {f.plus_two.sigma, f.plus_two.nullity};
    if (have_breakpoints && breakpoints_(x) == 0) {
      SturmSequence s(breakpoints_);
      const auto& b = f.breakpoints.at(static_cast<std::size_t>(s.count_open(kMinusTwo, x)));
      return {b.sigma, b.nullity};
    }
    Inertia in = inertia_at(x);
    return {Rational(in.signature()), in.zero};
  }

  const AlgebraicPoint& a = p.root();
  if (!have_breakpoints) return {Rational(f.intervals.front().sigma), f.intervals.front().nullity};
  PolyZ common = to_primitive_integer(gcd(to_rational(a.polynomial), to_rational(breakpoints_)));
  const bool on_breakpoint = common.degree() >= 1 && has_root_in(common, a.interval);

  SturmSequence s(breakpoints_);
  const int expected = on_breakpoint ? 1 : 0;
  IsolatingInterval iv = a.interval;
  while (s.count_open(iv.lo, iv.hi) != expected) {
    iv = refine(a.polynomial, iv, iv.length() / 2);
    if (iv.exact) return value_at(CirclePoint::at(*iv.exact), f);
  }
  const auto idx = static_cast<std::size_t>(iv.lo <= kMinusTwo ? 0 : s.count_half_open(kMinusTwo, iv.lo));
  if (on_breakpoint) {
    const auto& b = f.breakpoints.at(idx);
    return {b.sigma, b.nullity};
  }
  const auto& v = f.intervals.at(idx);
  return {Rational(v.sigma), v.nullity};
}

SignatureValue signature_nullity_at(const SeifertData& v, const CirclePoint& p) {
  return SignatureEngine(b_family(v)).value_at(p);
}

SignatureFunction signature_function(const SeifertData& v) {
  return SignatureEngine(b_family(v)).signature_function();
}

Laurent alexander_from_seifert(const SeifertData& v) {
  const Eigen::Index n = v.size();
  if (n == 0) return Laurent(1);
  LaurentMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = Laurent::monomial(v.matrix()(i, j), 1) - Laurent(v.matrix()(j, i));
  Laurent d = determinant(m);
  return d.is_zero() ? d : normalize(d);
}

int link_nullity(const SeifertData& v) {
  const Eigen::Index n = v.size();
  DenseMatrix<PolyZ> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = PolyZ(std::vector<Integer>{-v.matrix()(j, i), v.matrix()(i, j)});
  const int beta = static_cast<int>(n) - fraction_free_rank<PolyZ>(m);
  if (beta < 0 || beta > v.components() - 1) {
    throw std::logic_error("internal inconsistency: nullity " + std::to_string(beta) + " outside [0, " +
                           std::to_string(v.components() - 1) + "]");
  }
  return beta;
}

Rational witt_evaluate(const HermitianFamily& a, const CirclePoint& p) {
  SignatureEngine engine(a);
  if (engine.singular()) throw std::domain_error("singular family");
  return engine.value_at(p).sigma;
}

FloatSignature float_oracle(const SeifertData& v, double theta) {
  const Eigen::Index n = v.size();
  if (n == 0) return {};
  const std::complex<double> z = std::polar(1.0, theta);
  Eigen::MatrixXcd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      b(i, j) = (1.0 - z) * to_double(v.matrix()(i, j)) + (1.0 - std::conj(z)) * to_double(v.matrix()(j, i));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(b, Eigen::EigenvaluesOnly);
  FloatSignature out;
  for (Eigen::Index k = 0; k < n; ++k) {
    double lambda = solver.eigenvalues()(k);
    if (lambda > 1e-9) {
      ++out.sigma;
    } else if (lambda < -1e-9) {
      --out.sigma;
    } else {
      ++out.nullity;
    }
  }
  return out;
}

}  // namespace linkbound

namespace linkbound {

bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  const IsolatingInterval& p = a.interval;
  const IsolatingInterval& q = b.interval;
  if (p.exact || q.exact) {
    if (p.exact && q.exact) return *p.exact == *q.exact;
    const Rational& r = p.exact ? *p.exact : *q.exact;
    const AlgebraicPoint& other = p.exact ? b : a;
    return other.interval.contains(r) && other.polynomial(r) == 0;
  }
  Rational lo = std::max(p.lo, q.lo);
  Rational hi = std::min(p.hi, q.hi);
  if (!(lo < hi)) return false;
  PolyZ common = to_primitive_integer(gcd(to_rational(a.polynomial), to_rational(b.polynomial)));
  if (common.degree() < 1) return false;
  IsolatingInterval both;
  both.lo = lo;
  both.hi = hi;
  return has_root_in(common, both);
}

bool same_signature_function(const SignatureFunction& f, const SignatureFunction& g, std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.breakpoints.size() != g.breakpoints.size()) {
    return fail(std::to_string(f.breakpoints.size()) + " vs " + std::to_string(g.breakpoints.size()) +
                " breakpoints");
  }
  for (std::size_t j = 0; j < f.intervals.size(); ++j) {
    const auto& a = f.intervals[j];
    const auto& b = g.intervals[j];
    if (a.sigma != b.sigma || a.nullity != b.nullity) {
      return fail("interval " + std::to_string(j) + ": (" + std::to_string(a.sigma) + ", " +
                  std::to_string(a.nullity) + ") vs (" + std::to_string(b.sigma) + ", " + std::to_string(b.nullity) +
                  ")");
    }
  }
  for (std::size_t j = 0; j < f.breakpoints.size(); ++j) {
    const auto& a = f.breakpoints[j];
    const auto& b = g.breakpoints[j];
    if (!same_point(a.location, b.location)) return fail("breakpoint " + std::to_string(j) + " at different x");
    if (a.sigma != b.sigma || a.nullity != b.nullity) {
      return fail("breakpoint " + std::to_string(j) + ": (" + to_string(a.sigma) + ", " + std::to_string(a.nullity) +
                  ") vs (" + to_string(b.sigma) + ", " + std::to_string(b.nullity) + ")");
    }
  }
  if (f.minus_two != g.minus_two) return fail("values at x = -2 differ");
  if (f.plus_two.sigma != g.plus_two.sigma || f.plus_two.unaveraged != g.plus_two.unaveraged) {
    return fail("values at x = 2 differ");
  }
  return true;
}

}  // namespace linkbound
