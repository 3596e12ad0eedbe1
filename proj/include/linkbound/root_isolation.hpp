#pragma once

#include <optional>
#include <vector>

#include "linkbound/numeric.hpp"
#include "linkbound/polynomial.hpp"

namespace linkbound {

/// Open rational interval (lo, hi) holding exactly one distinct real root of
/// its target polynomial. Neither endpoint is a root. When the root happens
/// to be rational and was hit exactly, `exact` holds it.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  std::optional<Rational> exact;

  bool contains(const Rational& x) const { return lo < x && x < hi; }
  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return exact ? to_double(*exact) : to_double(midpoint()); }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Search window for root isolation; each end may be open or closed.
struct Window {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Window closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
  static Window open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
};

/// Sturm chain of a square-free polynomial. Remainders are rescaled by
/// positive constants only, which preserves sign variations.
class SturmSequence {
 public:
  explicit SturmSequence(const PolyZ& square_free);

  /// Sign variations at `x`, zeros skipped.
  int variations(const Rational& x) const;
  /// Number of distinct roots in the half-open interval (lo, hi].
  int count_half_open(const Rational& lo, const Rational& hi) const;
  /// Number of distinct roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const;

  const PolyZ& base() const { return chain_.front(); }

 private:
  std::vector<PolyZ> chain_;
};

/// Isolates every distinct real root of `q` inside `window`. The returned
/// intervals are disjoint, sorted, contained in the window and carry the
/// multiplicity of the root in `q`.
std::vector<IsolatingInterval> isolate_real_roots(const PolyZ& q, const Window& window);
std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& q, const Window& window);

/// Bisects an isolating interval of the square-free polynomial `f` until its
/// length is at most `tolerance`.
IsolatingInterval refine(const PolyZ& f, IsolatingInterval interval, const Rational& tolerance);

/// True when the (square-free) polynomial `f` has a root inside `interval`,
/// assuming the interval isolates at most one root of `f`.
bool has_root_in(const PolyZ& f, const IsolatingInterval& interval);

}  // namespace linkbound
