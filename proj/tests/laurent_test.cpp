#include <random>

#include <doctest.h>

#include "linkbound/errors.hpp"
#include "linkbound/laurent.hpp"
#include "linkbound/random_data.hpp"

using namespace linkbound;

namespace {

Laurent random_laurent(std::mt19937_64& rng) {
  const int low = uniform(rng, -4, 4);
  std::vector<Integer> c(static_cast<std::size_t>(uniform(rng, 1, 6)));
  for (auto& v : c) v = uniform(rng, -5, 5);
  c.back() = uniform(rng, 0, 1) ? 1 : -3;  // nonzero top
  c.front() = uniform(rng, 1, 4);           // nonzero bottom
  return Laurent(low, c);
}

}  // namespace

TEST_CASE("normalize clears units") {
  const Laurent trefoil = parse_laurent("t^2-t+1");
  CHECK(normalize(Laurent::monomial(Integer(-1), -1) * trefoil) == trefoil);
  CHECK(normalize(parse_laurent("2t^3-5t^2+2t")) == parse_laurent("2t^2-5t+2"));
  const Laurent t35 = parse_laurent("t^8-t^7+t^5-t^4+t^3-t+1");
  CHECK(normalize(t35) == t35);
  CHECK_THROWS_AS(normalize(Laurent()), ZeroPolynomialError);
}

TEST_CASE("width") {
  CHECK(width(Laurent(1)) == 0);
  CHECK(width(parse_laurent("t^2-t+1")) == 2);
  CHECK(width(parse_laurent("t^8-t^7+t^5-t^4+t^3-t+1") * parse_laurent("2t^2-5t+2")) == 10);
  CHECK_THROWS_AS(width(Laurent()), ZeroPolynomialError);
}

TEST_CASE("involution") {
  CHECK(involution(Laurent::t()) == Laurent::monomial(Integer(1), -1));
  CHECK(involution(parse_laurent("t^2-t+1")) == parse_laurent("t^-2-t^-1+1"));
  const Laurent d = parse_laurent("t^2-t+1");
  CHECK(equal_up_to_units(involution(d), d));
  CHECK(is_symmetric(parse_laurent("t-1+t^-1")));
  CHECK_FALSE(is_symmetric(d));
}

TEST_CASE("width is additive and the involution is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Laurent a = random_laurent(rng);
    Laurent b = random_laurent(rng);
    CHECK(width(a * b) == width(a) + width(b));
    CHECK(involution(a * b) == involution(a) * involution(b));
    CHECK(involution(a + b) == involution(a) + involution(b));
    CHECK(involution(involution(a)) == a);
    CHECK(equal_up_to_units(normalize(a), a));
  }
}

TEST_CASE("symmetric polynomials in x = t + 1/t") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    Laurent a = random_laurent(rng);
    Laurent s = a * involution(a);
    PolyZ q = symmetric_to_x(s);
    CHECK(x_to_symmetric(q) == s);
  }
  CHECK(symmetric_to_x(parse_laurent("t-1+t^-1")) == PolyZ(std::vector<Integer>{-1, 1}));
  CHECK_THROWS_AS(symmetric_to_x(Laurent::t()), std::invalid_argument);
}

TEST_CASE("parse_laurent accepts the usual spellings") {
  CHECK(parse_laurent("1") == Laurent(1));
  CHECK(parse_laurent("0").is_zero());
  CHECK(parse_laurent("-t") == Laurent::monomial(Integer(-1), 1));
  CHECK(parse_laurent("3*t^{-2} + t^(1) - 2") == Laurent(-2, {Integer(3), Integer(0), Integer(-2), Integer(1)}));
  CHECK(parse_laurent(" t^2 - t + 1 ") == parse_laurent("t^2-t+1"));
  CHECK(parse_laurent("x^2+1", 'x') == parse_laurent("t^2+1"));
  CHECK(to_string(parse_laurent("2t^10-7t^9+7t^8")) == "2t^10-7t^9+7t^8");
}

TEST_CASE("parse_laurent reports the column") {
  CHECK_THROWS_AS(parse_laurent("t^"), ParseError);
  CHECK_THROWS_AS(parse_laurent("t+*2"), ParseError);
  CHECK_THROWS_AS(parse_laurent("2s"), ParseError);
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  try {
    parse_laurent("t^2 + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
}

TEST_CASE("string round trip") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    Laurent a = random_laurent(rng);
    CHECK(parse_laurent(to_string(a)) == a);
  }
}
