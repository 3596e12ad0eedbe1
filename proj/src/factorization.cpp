#include "linkbound/factorization.hpp"

#include <algorithm>
#include <map>

namespace linkbound {
namespace {

// Positive divisors of |v| by trial division. v != 0.
std::vector<Integer> positive_divisors(const Integer& v) {
  Integer n = abs(v);
  std::vector<std::pair<Integer, int>> primes;
  for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [pr, e] : primes) {
    std::size_t base = divs.size();
    Integer pw(1);
    for (int k = 1; k <= e; ++k) {
      pw *= pr;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Lagrange interpolation through (xs[i], ys[i]) over Q; nullopt unless every
// coefficient is an integer.
std::optional<PolyZ> interpolate_integer(const std::vector<Integer>& xs,
                                         const std::vector<Integer>& ys) {
  PolyQ acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    PolyQ basis(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= PolyQ(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
      denom *= Rational(xs[i] - xs[j]);
    }
    acc += basis * PolyQ(Rational(ys[i]) / denom);
  }
  std::vector<Integer> out;
  for (const auto& c : acc.coeffs()) {
    if (denominator(c) != 1) return std::nullopt;
    out.push_back(numerator(c));
  }
  return PolyZ(std::move(out));
}

struct SamplePoint {
  Integer x;
  Integer value;
  std::vector<Integer> divisors;
};

// Evaluation points with the fewest divisors keep the search small.
std::vector<SamplePoint> choose_points(const PolyZ& p, int count) {
  std::vector<SamplePoint> pts;
  for (int k = 0; k <= 24; ++k) {
    for (int s : {1, -1}) {
      if (k == 0 && s == -1) continue;
      Integer x(s * k);
      Integer v = p(x);
      if (v == 0) continue;
      if (abs(v) > Integer("1000000000000000000")) continue;
      pts.push_back({x, v, positive_divisors(v)});
    }
  }
  std::stable_sort(pts.begin(), pts.end(), [](const SamplePoint& a, const SamplePoint& b) {
    return a.divisors.size() < b.divisors.size();
  });
  if (static_cast<int>(pts.size()) > count) pts.resize(static_cast<std::size_t>(count));
  return pts;
}

struct KroneckerSearch {
  const PolyZ& p;
  int degree;
  std::vector<SamplePoint> pts;
  std::vector<Integer> xs;
  std::vector<Integer> ys;
  std::optional<PolyZ> result;

  bool dfs(std::size_t i) {
    if (i == pts.size()) {
      auto g = interpolate_integer(xs, ys);
      if (!g || g->degree() != degree) return false;
      if (p.leading() % g->leading() != 0) return false;
      if (g->coeff(0) == 0 || p.coeff(0) % g->coeff(0) != 0) return false;
      if (!divides(*g, p)) return false;
      result = primitive_part(*g);
      return true;
    }
    for (const auto& d : pts[i].divisors) {
      for (int s : {1, -1}) {
        // g and -g give the same factor; fix the sign at the first point.
        if (i == 0 && s == -1) continue;
        Integer v = d * s;
        bool ok = true;
        // g(a) - g(b) is divisible by a - b for integer polynomials.
        for (std::size_t j = 0; j < i && ok; ++j) {
          if ((v - ys[j]) % (pts[i].x - xs[j]) != 0) ok = false;
        }
        if (!ok) continue;
        xs.push_back(pts[i].x);
        ys.push_back(v);
        bool done = dfs(i + 1);
        xs.pop_back();
        ys.pop_back();
        if (done) return true;
      }
    }
    return false;
  }
};

// Irreducible factors of a primitive square-free polynomial with p(0) != 0.
void split_square_free(const PolyZ& p, std::vector<PolyZ>& out) {
  if (p.degree() < 1) return;
  for (int d = 1; d <= p.degree() / 2; ++d) {
    if (auto g = kronecker_factor_of_degree(p, d)) {
      out.push_back(*g);
      split_square_free(primitive_part(exact_divide(p, *g)), out);
      return;
    }
  }
  out.push_back(primitive_part(p));
}

Laurent reciprocal(const PolyZ& g) { return normalize(involution(Laurent::from_polynomial(g))); }

bool is_perfect_square(const Integer& v) { return exact_sqrt(abs(v)).has_value(); }

// Preferred member of a reciprocal pair, for deterministic witnesses.
bool prefer(const PolyZ& a, const PolyZ& b) {
  Integer la = abs(a.leading());
  Integer lb = abs(b.leading());
  if (la != lb) return la < lb;
  return a.coeffs() < b.coeffs();
}

}  // namespace

PolyZ Factorization::expand() const {
  PolyZ r(unit);
  for (const auto& [f, e] : factors) {
    for (int k = 0; k < e; ++k) r *= f;
  }
  return r;
}

std::optional<PolyZ> kronecker_factor_of_degree(const PolyZ& p, int degree) {
  if (degree < 1 || degree > p.degree() / 2) return std::nullopt;
  KroneckerSearch search{p, degree, choose_points(p, degree + 1), {}, {}, std::nullopt};
  if (static_cast<int>(search.pts.size()) < degree + 1) return std::nullopt;
  search.dfs(0);
  return search.result;
}

Factorization factor(const PolyZ& p) {
  if (p.is_zero()) throw ZeroPolynomialError("factor");
  Factorization out;
  Integer c = content(p);
  if (p.leading().sign() < 0) c = -c;
  out.unit = c;
  PolyZ q = p.divided_by(c);
  int zeros = 0;
  while (q.degree() > 0 && q.coeff(0) == 0) {
    q = PolyZ(std::vector<Integer>(q.coeffs().begin() + 1, q.coeffs().end()));
    ++zeros;
  }
  std::map<std::vector<Integer>, std::pair<PolyZ, int>> collected;
  if (zeros > 0) collected[PolyZ::x().coeffs()] = {PolyZ::x(), zeros};
  for (const auto& [sf, k] : square_free_decomposition(q)) {
    std::vector<PolyZ> irreducible;
    split_square_free(sf, irreducible);
    for (const auto& g : irreducible) {
      auto& slot = collected[g.coeffs()];
      slot.first = g;
      slot.second += k;
    }
  }
  for (auto& [key, entry] : collected) out.factors.push_back(entry);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  // Yun's factors are primitive up to sign; fold any leftover constant.
  Integer residual = p.leading() / out.expand().leading();
  out.unit *= residual;
  return out;
}

std::string to_string(FoxMilnorVerdict v) {
  switch (v) {
    case FoxMilnorVerdict::passes: return "passes";
    case FoxMilnorVerdict::fails: return "fails";
    case FoxMilnorVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

FoxMilnorResult fox_milnor_test(const Laurent& p, int degree_cap) {
  if (p.is_zero()) throw ZeroPolynomialError("fox_milnor_test");
  Laurent q = normalize(p);
  PolyZ poly = q.to_polynomial();
  FoxMilnorResult r;
  if (abs(poly(Integer(1))) != 1) {
    r.verdict = FoxMilnorVerdict::fails;
    r.reason = "p(1) is not +-1, so p is not a knot Alexander polynomial of the form f(t)f(t^-1)";
    return r;
  }
  if (width(q) % 2 != 0) {
    r.verdict = FoxMilnorVerdict::fails;
    r.reason = "odd width";
    return r;
  }
  if (!is_perfect_square(poly(Integer(-1)))) {
    r.verdict = FoxMilnorVerdict::fails;
    r.reason = "|p(-1)| = " + to_string(abs(poly(Integer(-1)))) + " is not a perfect square";
    return r;
  }
  if (poly.degree() > degree_cap) {
    r.verdict = FoxMilnorVerdict::inconclusive;
    r.reason = "degree " + std::to_string(poly.degree()) + " exceeds cap " + std::to_string(degree_cap);
    return r;
  }

  Factorization fz = factor(poly);
  std::map<std::vector<Integer>, int> exponent;
  for (const auto& [g, e] : fz.factors) exponent[g.coeffs()] = e;

  Laurent witness(1);
  for (const auto& [g, e] : fz.factors) {
    PolyZ partner = reciprocal(g).to_polynomial();
    if (partner == g) {
      if (e % 2 != 0) {
        r.verdict = FoxMilnorVerdict::fails;
        r.reason = "self-reciprocal factor " + to_string(g, "t") + " has odd exponent";
        return r;
      }
      for (int k = 0; k < e / 2; ++k) witness *= Laurent::from_polynomial(g);
      continue;
    }
    auto it = exponent.find(partner.coeffs());
    int pe = it == exponent.end() ? 0 : it->second;
    if (pe != e) {
      r.verdict = FoxMilnorVerdict::fails;
      r.reason = "factor " + to_string(g, "t") + " is not matched by its reciprocal";
      return r;
    }
    if (prefer(g, partner)) {
      for (int k = 0; k < e; ++k) witness *= Laurent::from_polynomial(g);
    }
  }
  witness = normalize(witness);
  if (normalize(witness * involution(witness)) != q) {
    throw std::logic_error("fox_milnor_test: witness does not reproduce the polynomial");
  }
  r.verdict = FoxMilnorVerdict::passes;
  r.witness = witness;
  r.reason = "p = +-t^k f(t) f(t^-1) with f = " + to_string(witness);
  return r;
}

}  // namespace linkbound
