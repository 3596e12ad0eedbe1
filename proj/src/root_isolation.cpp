#include "linkbound/root_isolation.hpp"

#include <algorithm>

namespace linkbound {
namespace {

// Scales by a positive rational so the result is a primitive integer
// polynomial; the sign of every value is preserved.
PolyZ positive_primitive(const PolyQ& p) {
  if (p.is_zero()) return {};
  Integer l(1);
  for (const auto& c : p.coeffs()) {
    Integer d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(numerator(c) * (l / denominator(c)));
  PolyZ z(std::move(v));
  return z.divided_by(content(z));
}

int sign_at(const PolyZ& p, const Rational& x) { return sign(p(x)); }

struct Isolator {
  const PolyZ& f;
  const SturmSequence& sturm;
  std::vector<IsolatingInterval> found;

  IsolatingInterval around_exact(const Rational& r, const Rational& lo, const Rational& hi) {
    Rational delta = std::min(r - lo, hi - r) / 2;
    if (delta == 0) delta = Rational(1, 2);
    while (true) {
      Rational a = r - delta;
      Rational b = r + delta;
      if (sign_at(f, a) != 0 && sign_at(f, b) != 0 && sturm.count_open(a, b) == 1) {
        IsolatingInterval iv{a, b, 1, r};
        return iv;
      }
      delta /= 2;
    }
  }

  // Roots in (lo, hi].
  void run(const Rational& lo, const Rational& hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      if (sign_at(f, hi) == 0) {
        found.push_back(around_exact(hi, lo, hi + (hi - lo)));
        return;
      }
      Rational a = lo;
      Rational b = hi;
      // Shrink until neither endpoint is a root.
      while (sign_at(f, a) == 0) {
        Rational m = (a + b) / 2;
        if (sign_at(f, m) == 0) {
          found.push_back(around_exact(m, a, b));
          return;
        }
        if (sturm.count_half_open(m, b) == 1) {
          a = m;
        } else {
          b = m;
        }
      }
      found.push_back(IsolatingInterval{a, b, 1, std::nullopt});
      return;
    }
    Rational m = (lo + hi) / 2;
    int left = sturm.count_half_open(lo, m);
    run(lo, m, left);
    run(m, hi, count - left);
  }
};

}  // namespace

SturmSequence::SturmSequence(const PolyZ& square_free) {
  if (square_free.is_zero()) throw ZeroPolynomialError("SturmSequence");
  chain_.push_back(square_free);
  PolyZ d = square_free.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.divided_by(content(d)));
  while (chain_.back().degree() > 0) {
    const PolyZ& a = chain_[chain_.size() - 2];
    const PolyZ& b = chain_.back();
    PolyQ r = divmod(to_rational(a), to_rational(b)).second;
    if (r.is_zero()) break;
    chain_.push_back(positive_primitive(-r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

int SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return count_half_open(lo, hi) - (sign_at(chain_.front(), hi) == 0 ? 1 : 0);
}

std::vector<IsolatingInterval> isolate_real_roots(const PolyZ& q, const Window& window) {
  if (q.is_zero()) throw ZeroPolynomialError("isolate_real_roots");
  if (!(window.lo < window.hi) || q.degree() < 1) return {};
  PolyZ f = square_free_part(q);
  SturmSequence sturm(f);
  Isolator iso{f, sturm, {}};
  iso.run(window.lo, window.hi, sturm.count_half_open(window.lo, window.hi));

  std::vector<IsolatingInterval> roots;
  if (window.lo_closed && sign_at(f, window.lo) == 0) {
    Rational below = window.lo - (window.hi - window.lo);
    roots.push_back(iso.around_exact(window.lo, below, window.hi));
  }
  for (auto& iv : iso.found) {
    if (!window.hi_closed && iv.exact && *iv.exact == window.hi) continue;
    roots.push_back(std::move(iv));
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });

  // Multiplicities from the square-free decomposition: exactly one factor
  // vanishes at each root.
  auto factors = square_free_decomposition(q);
  for (auto& iv : roots) {
    for (const auto& [g, k] : factors) {
      if (has_root_in(g, iv)) {
        iv.multiplicity = k;
        break;
      }
    }
  }

  // Intervals around exact roots may overlap neighbours; shrink until disjoint.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(roots[i].hi <= roots[i + 1].lo)) {
      Rational tol = std::min(roots[i].length(), roots[i + 1].length()) / 2;
      roots[i] = refine(f, roots[i], tol);
      roots[i + 1] = refine(f, roots[i + 1], tol);
    }
  }
  // Clip to the window interior.
  for (auto& iv : roots) {
    while (iv.lo < window.lo || iv.hi > window.hi) {
      if (iv.exact && (*iv.exact == window.lo || *iv.exact == window.hi)) break;
      iv = refine(f, iv, iv.length() / 2);
    }
  }
  return roots;
}

std::vector<IsolatingInterval> isolate_real_roots(const PolyQ& q, const Window& window) {
  if (q.is_zero()) throw ZeroPolynomialError("isolate_real_roots");
  // Scaling by a nonzero constant does not move roots.
  PolyZ z = positive_primitive(q);
  return isolate_real_roots(z, window);
}

IsolatingInterval refine(const PolyZ& f, IsolatingInterval interval, const Rational& tolerance) {
  if (interval.exact) {
    const Rational& r = *interval.exact;
    while (interval.length() > tolerance) {
      Rational half = interval.length() / 4;
      interval.lo = r - half;
      interval.hi = r + half;
    }
    return interval;
  }
  PolyZ g = square_free_part(f);
  int slo = sign_at(g, interval.lo);
  while (interval.length() > tolerance) {
    Rational m = interval.midpoint();
    int sm = sign_at(g, m);
    if (sm == 0) {
      interval.exact = m;
      Rational half = interval.length() / 4;
      interval.lo = m - half;
      interval.hi = m + half;
      continue;
    }
    if (sm == slo) {
      interval.lo = m;
    } else {
      interval.hi = m;
    }
  }
  return interval;
}

bool has_root_in(const PolyZ& f, const IsolatingInterval& interval) {
  if (f.is_zero()) return true;
  if (interval.exact) return sign_at(f, *interval.exact) == 0;
  if (f.degree() < 1) return false;
  SturmSequence s(square_free_part(f));
  return s.count_open(interval.lo, interval.hi) > 0;
}

}  // namespace linkbound
