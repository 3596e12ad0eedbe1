#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "linkbound/hermitian.hpp"
#include "linkbound/random_data.hpp"
#include "linkbound/root_isolation.hpp"
#include "oracles.hpp"

using namespace linkbound;

namespace {

PolyZ poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return PolyZ(v);
}

}  // namespace

TEST_CASE("isolation examples") {
  auto roots = isolate_real_roots(poly({-1, 1}), Window::closed(-2, 2));
  REQUIRE(roots.size() == 1);
  CHECK((roots[0].contains(1) || roots[0].exact == Rational(1)));
  CHECK(roots[0].multiplicity == 1);

  CHECK(isolate_real_roots(poly({-4, 0, 1}), Window::open(-2, 2)).empty());
  CHECK(isolate_real_roots(poly({-4, 0, 1}), Window::closed(-2, 2)).size() == 2);
  CHECK_THROWS_AS(isolate_real_roots(PolyZ(), Window::closed(-2, 2)), ZeroPolynomialError);
}

TEST_CASE("trefoil breakpoint polynomial has one root inside the circle range") {
  // det B(t) for V = [[-1, 1], [0, -1]] is (x - 2)^2 - (2 - x) = (x - 2)(x - 1)
  // in x = t + 1/t.
  SeifertData v(int_matrix({{-1, 1}, {0, -1}}), 1);
  PolyZ d = symmetric_to_x(determinant(b_family(v).matrix()));
  CHECK(d == poly({2, -3, 1}));
  auto roots = isolate_real_roots(d, Window::open(-2, 2));
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].approx() - 1.0) < 1e-12);
}

TEST_CASE("multiplicity is reported") {
  auto roots = isolate_real_roots(poly({1, -2, 1}) * poly({1, 1}), Window::closed(-2, 2));  // (x-1)^2 (x+1)
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].multiplicity == 2);
}

TEST_CASE("refinement keeps the root") {
  PolyZ q = poly({-2, 0, 1});  // sqrt 2
  auto roots = isolate_real_roots(q, Window::closed(0, 2));
  REQUIRE(roots.size() == 1);
  IsolatingInterval r = refine(q, roots[0], Rational(1, 1 << 30));
  CHECK(r.length() <= Rational(1, 1 << 30));
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi > 2);
  CHECK(has_root_in(q, r));
}

TEST_CASE("Sturm counts match the companion-matrix oracle on random polynomials") {
  std::mt19937_64 rng(20261019);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const int d = uniform(rng, 1, 6);
    std::vector<long> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = uniform(rng, -5, 5);
    if (c.back() == 0) c.back() = 1;
    std::vector<Integer> ci(c.begin(), c.end());
    PolyZ q(ci);

    auto oracle_roots = oracle::companion_real_roots(c);
    std::sort(oracle_roots.begin(), oracle_roots.end());
    // Skip cases the floating oracle cannot resolve: clustered roots, roots
    // near the window edge, or nearly real complex pairs.
    bool clear = true;
    for (std::size_t i = 0; i < oracle_roots.size(); ++i) {
      if (std::abs(std::abs(oracle_roots[i]) - 2.0) < 1e-4) clear = false;
      if (i > 0 && oracle_roots[i] - oracle_roots[i - 1] < 1e-4) clear = false;
    }
    if (oracle::companion_real_roots(c, 1e-3).size() != oracle_roots.size()) clear = false;
    if (!clear) continue;
    ++checked;

    std::vector<double> inside;
    for (double r : oracle_roots) {
      if (r > -2 && r < 2) inside.push_back(r);
    }
    auto found = isolate_real_roots(q, Window::closed(-2, 2));
    REQUIRE(found.size() == inside.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      const double lo = to_double(found[i].lo) - 1e-9;
      const double hi = to_double(found[i].hi) + 1e-9;
      CHECK(lo <= inside[i]);
      CHECK(inside[i] <= hi);
      if (i > 0) CHECK(found[i - 1].hi <= found[i].lo);
    }
  }
  CHECK(checked >= 80);
}
