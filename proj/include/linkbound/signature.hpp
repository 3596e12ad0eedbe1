#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "linkbound/hermitian.hpp"
#include "linkbound/laurent.hpp"
#include "linkbound/root_isolation.hpp"
#include "linkbound/seifert.hpp"

namespace linkbound {

/// Real algebraic number given by an integer polynomial and an interval
/// isolating one of its roots.
struct AlgebraicPoint {
  PolyZ polynomial;
  IsolatingInterval interval;
  friend bool operator==(const AlgebraicPoint&, const AlgebraicPoint&) = default;
};

/// Decimal value of the root, refined to about 1e-12.
double approximate(const AlgebraicPoint& a);

/// Point z = e^{i theta} of the upper unit circle, located by x = 2 cos theta
/// in [-2, 2]. Conjugate points share a value, so x alone suffices.
class CirclePoint {
 public:
  static CirclePoint at(const Rational& x);
  /// Throws std::invalid_argument unless the interval isolates exactly one
  /// root of `polynomial` within [-2, 2].
  static CirclePoint algebraic(PolyZ polynomial, IsolatingInterval interval);

  bool is_rational() const { return std::holds_alternative<Rational>(where_); }
  const Rational& x() const { return std::get<Rational>(where_); }
  const AlgebraicPoint& root() const { return std::get<AlgebraicPoint>(where_); }
  double approx() const;

 private:
  explicit CirclePoint(std::variant<Rational, AlgebraicPoint> w) : where_(std::move(w)) {}
  std::variant<Rational, AlgebraicPoint> where_;
};

/// Signature (an integer, or a half-integer when averaged) and nullity.
struct SignatureValue {
  Rational sigma;
  int nullity = 0;
  friend bool operator==(const SignatureValue&, const SignatureValue&) = default;
};

/// Open x-interval between consecutive breakpoints with its constant value.
struct SignatureInterval {
  Rational sample;  // exact sample point used for the evaluation
  int sigma = 0;
  int nullity = 0;
  friend bool operator==(const SignatureInterval&, const SignatureInterval&) = default;
};

/// Root of the breakpoint polynomial inside (-2, 2).
struct Breakpoint {
  AlgebraicPoint location;
  int left_sigma = 0;
  int right_sigma = 0;
  Rational sigma;  // (left + right) / 2
  int nullity = 0;

  /// Decimal value, refined to about 1e-12.
  double approx() const;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Value at x = -2 (z = -1) or x = 2 (z = 1). `sigma` is the limit from the
/// adjacent interval; `unaveraged` and `nullity` are those of the matrix
/// B(z) itself.
struct EndpointValue {
  Rational x;
  Rational sigma;
  int unaveraged = 0;
  int nullity = 0;
  friend bool operator==(const EndpointValue&, const EndpointValue&) = default;
};

/// Piecewise constant signature and nullity on x in [-2, 2]. intervals[j]
/// lies between breakpoints[j - 1] and breakpoints[j], with -2 and 2 closing
/// the ends, so there is always one more interval than breakpoints.
struct SignatureFunction {
  int size = 0;
  bool singular_family = false;  // det B(t) vanishes identically
  PolyZ breakpoint_polynomial;   // square-free, roots in (-2, 2) are the breakpoints
  std::vector<Breakpoint> breakpoints;
  std::vector<SignatureInterval> intervals;
  EndpointValue minus_two;
  EndpointValue plus_two;

  bool constant() const { return breakpoints.empty(); }
  /// max |sigma| over interval values.
  int max_abs_sigma() const;
  /// Leftmost interval attaining max_abs_sigma.
  std::size_t witness_interval() const;
  /// x range of interval j as decimal approximations.
  std::pair<double, double> interval_bounds(std::size_t j) const;

  friend bool operator==(const SignatureFunction&, const SignatureFunction&) = default;
};

/// Precomputed data for evaluating the signature of a hermitian family on the
/// unit circle: leading principal minors and the breakpoint polynomial as
/// integer polynomials in x = t + t^-1, plus the diagonal-form factors that
/// give nullities at algebraic breakpoints.
class SignatureEngine {
 public:
  explicit SignatureEngine(HermitianFamily family);

  const HermitianFamily& family() const { return family_; }
  bool singular() const { return singular_; }
  const PolyZ& breakpoint_polynomial() const { return breakpoints_; }

  /// Exact inertia of A(z) at rational x in [-2, 2] (not averaged).
  Inertia inertia_at(const Rational& x) const;

  SignatureFunction signature_function() const;

  /// Averaged signature and exact nullity at any circle point.
  SignatureValue value_at(const CirclePoint& p) const;
  SignatureValue value_at(const CirclePoint& p, const SignatureFunction& f) const;

 private:
  bool minors_usable(const Rational& x) const;
  Rational pick_sample(const Rational& lo, const Rational& hi) const;
  int breakpoint_nullity(const IsolatingInterval& iv) const;

  HermitianFamily family_;
  std::vector<PolyZ> minors_;  // leading principal minors in x
  bool singular_ = false;
  PolyZ breakpoints_;               // square-free
  std::vector<PolyZ> circle_factors_;  // E_i: one per nonconstant diagonal entry
  int generic_corank_ = 0;
};

/// True when f and g describe the same function: equal breakpoints (as
/// algebraic numbers), equal values on every interval and breakpoint, and
/// equal values at x = -2 and x = 2. The nullity at x = 2 is the size of the
/// matrix (B(1) = 0) and is ignored. On mismatch `why` says where.
bool same_signature_function(const SignatureFunction& f, const SignatureFunction& g, std::string* why = nullptr);

/// True when two algebraic points are the same real number.
bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b);

/// B(t) of the Seifert matrix, evaluated at a circle point.
SignatureValue signature_nullity_at(const SeifertData& v, const CirclePoint& p);

SignatureFunction signature_function(const SeifertData& v);

/// normalize(det(tV - V^T)); 1 for the empty matrix and 0 when the
/// determinant vanishes.
Laurent alexander_from_seifert(const SeifertData& v);

/// Corank of tV - V^T over Q(t). Throws std::logic_error outside [0, m - 1].
int link_nullity(const SeifertData& v);

/// Averaged signature of A(z) at p. Throws std::domain_error("singular
/// family") when det A vanishes identically.
Rational witt_evaluate(const HermitianFamily& a, const CirclePoint& p);

/// Floating-point signature of B(e^{i theta}) from eigenvalues, counting
/// |lambda| <= 1e-9 as zero. Not certified; used as an independent check.
struct FloatSignature {
  int sigma = 0;
  int nullity = 0;
};
FloatSignature float_oracle(const SeifertData& v, double theta);

}  // namespace linkbound
