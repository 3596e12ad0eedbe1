#include <random>

#include <doctest.h>

#include "linkbound/braid.hpp"
#include "linkbound/random_data.hpp"
#include "linkbound/seifert.hpp"
#include "linkbound/signature.hpp"
#include "oracles.hpp"

using namespace linkbound;

namespace {

std::vector<int> repeat(const std::vector<int>& w, int times) {
  std::vector<int> out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Integer det_skew(const SeifertData& s) {
  const auto n = static_cast<std::size_t>(s.size());
  oracle::LaurentGrid m(n, std::vector<Laurent>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Laurent(s.matrix()(Eigen::Index(i), Eigen::Index(j)) - s.matrix()(Eigen::Index(j), Eigen::Index(i)));
    }
  }
  return oracle::laplace_determinant(m).coeff(0);
}

Integer max_entry(const IntMatrix& m) {
  Integer out = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out = std::max(out, abs(m(i, j)));
  return out;
}

}  // namespace

TEST_CASE("parse_braid") {
  CHECK(parse_braid("strands=3; 1 2 1 2 1 2 1 2 1 2") == BraidWord{3, repeat({1, 2}, 5)});
  CHECK(parse_braid("strands=2; 1 1 1") == BraidWord{2, {1, 1, 1}});
  CHECK(parse_braid("strands=3; s1 s2^-1 S2^{-1}") == BraidWord{3, {1, -2, -2}});
  CHECK(parse_braid("strands=4;") == BraidWord{4, {}});
  CHECK_THROWS_AS(parse_braid("strands=3; 5"), ParseError);
  CHECK_THROWS_AS(parse_braid("strands=3; 0"), ParseError);
  CHECK_THROWS_AS(parse_braid("1 2"), ParseError);
  CHECK_THROWS_AS(parse_braid("strands=3; 1 x"), ParseError);
  BraidWord b{3, {1, -2}};
  CHECK(parse_braid(to_string(b)) == b);
}

TEST_CASE("torus braids and closures") {
  CHECK(torus_braid(2, 3) == BraidWord{2, {1, 1, 1}});
  CHECK(torus_braid(3, 5) == BraidWord{3, repeat({1, 2}, 5)});
  CHECK(closure_components(BraidWord{3, {}}) == 3);
  CHECK(closure_components(BraidWord{2, {1, 1, 1}}) == 1);
  CHECK(closure_components(torus_braid(3, 5)) == 1);
  CHECK(closure_components(torus_braid(2, 4)) == 2);
  CHECK(closure_components(torus_braid(3, 3)) == 3);
}

TEST_CASE("closure_components is invariant under Markov moves") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const int n = uniform(rng, 2, 5);
    BraidWord b = random_braid(rng, n, uniform(rng, n, 12));
    const int m = closure_components(b);
    for (int c = 0; c < 50; ++c) {
      const int g = uniform(rng, 1, n - 1) * (uniform(rng, 0, 1) ? 1 : -1);
      BraidWord conj{n, {g}};
      conj.letters.insert(conj.letters.end(), b.letters.begin(), b.letters.end());
      conj.letters.push_back(-g);
      CHECK(closure_components(conj) == m);
      b = conj;
    }
    BraidWord stab = b;
    stab.strands = n + 1;
    stab.letters.push_back(uniform(rng, 0, 1) ? n : -n);
    CHECK(closure_components(stab) == m);
  }
}

TEST_CASE("Seifert matrices from braids") {
  SeifertData trefoil = seifert_matrix_from_braid(torus_braid(2, 3));
  CHECK(trefoil.size() == 2);
  CHECK(trefoil.genus() == 1);
  CHECK(abs(det_skew(trefoil)) == 1);
  CHECK(alexander_from_seifert(trefoil) == parse_laurent("t^2-t+1"));

  SeifertData t35 = seifert_matrix_from_braid(torus_braid(3, 5));
  CHECK(t35.size() == 8);
  CHECK(t35.components() == 1);
  CHECK(t35.genus() == 4);

  SeifertData unknot = seifert_matrix_from_braid(BraidWord{1, {}});
  CHECK(unknot.size() == 0);
  CHECK(unknot.components() == 1);
  CHECK(unknot.genus() == 0);

  CHECK_THROWS_AS(seifert_matrix_from_braid(BraidWord{3, {1, 1}}), InvalidSeifertData);

  SeifertData link = seifert_matrix_from_braid(torus_braid(2, 4));
  CHECK(link.components() == 2);
  CHECK(link.size() == 3);
}

TEST_CASE("construction checks n = 2g + m - 1 and the elementary divisors") {
  CHECK_THROWS_AS(SeifertData(int_matrix({{1, 0}, {0, 1}}), 1), InvalidSeifertData);  // V - V^T = 0
  CHECK_THROWS_AS(SeifertData(int_matrix({{0, 2}, {0, 0}}), 1), InvalidSeifertData);  // det 4
  CHECK_THROWS_AS(SeifertData(int_matrix({{1}}), 1), InvalidSeifertData);
  CHECK_NOTHROW(SeifertData(int_matrix({{1}}), 2));
  CHECK(SeifertData::infer_components(int_matrix({{0, 0, 0}, {0, -1, 1}, {0, 0, -1}})).components() == 2);
}

TEST_CASE("Alexander polynomial agrees with the Burau oracle on braid knots") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    const int n = uniform(rng, 2, 4);
    BraidWord b = random_knot_braid(rng, n, uniform(rng, n, 10));
    SeifertData v = seifert_matrix_from_braid(b);
    Laurent burau = oracle::burau_alexander(b);
    Laurent mine = alexander_from_seifert(v);
    CHECK_MESSAGE(equal_up_to_units(burau, mine), to_string(b));
    CHECK(equal_up_to_units(oracle::seifert_determinant(v.matrix()), mine));
  }
  CHECK(equal_up_to_units(oracle::burau_alexander(torus_braid(3, 5)), parse_laurent("t^8-t^7+t^5-t^4+t^3-t+1")));
}

TEST_CASE("connected sum") {
  SeifertData trefoil(int_matrix({{-1, 1}, {0, -1}}), 1, "trefoil");
  SeifertData empty(IntMatrix(0, 0), 1);
  CHECK(connected_sum(empty, trefoil).matrix() == trefoil.matrix());
  SeifertData t35 = seifert_matrix_from_braid(torus_braid(3, 5));
  SeifertData sum = connected_sum(t35, SeifertData(int_matrix({{-1, 1}, {0, 2}}), 1));
  CHECK(sum.size() == 10);
  CHECK(sum.genus() == 5);
  CHECK(alexander_from_seifert(sum) ==
        normalize(alexander_from_seifert(t35) * parse_laurent("2t^2-5t+2")));
  SeifertData hopf(int_matrix({{1}}), 2);
  CHECK_THROWS_AS(connected_sum(hopf, trefoil), InvalidSeifertData);
}

TEST_CASE("mirror") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 20; ++k) {
    SeifertData v = random_seifert(rng);
    SeifertData w = mirror(v);
    CHECK(w.components() == v.components());
    CHECK(w.genus() == v.genus());
    CHECK(mirror(w).matrix() == v.matrix());
  }
  CHECK(mirror(SeifertData(IntMatrix(0, 0), 1)).size() == 0);
}

TEST_CASE("stabilize") {
  SeifertData empty(IntMatrix(0, 0), 1);
  SeifertData s = stabilize(empty, StabilizeDirection::row_first, IntVector(0));
  CHECK(s.size() == 2);
  CHECK(abs(det_skew(s)) == 1);

  SeifertData trefoil(int_matrix({{-1, 1}, {0, -1}}), 1);
  IntVector w(2);
  w << Integer(2), Integer(-1);
  for (auto dir : {StabilizeDirection::row_first, StabilizeDirection::column_first}) {
    SeifertData t = stabilize(trefoil, dir, w);
    CHECK(t.size() == 4);
    CHECK(t.genus() == 2);
    CHECK(t.components() == 1);
    CHECK(alexander_from_seifert(t) == alexander_from_seifert(trefoil));
  }
  CHECK_THROWS_AS(stabilize(trefoil, StabilizeDirection::row_first, IntVector(3)), std::invalid_argument);
}

TEST_CASE("random generators produce valid data") {
  std::mt19937_64 rng(31);
  std::vector<int> sizes(7, 0);
  for (int k = 0; k < 120; ++k) {
    SeifertData v = random_seifert(rng);
    CHECK(v.size() >= 1);
    CHECK(v.size() <= 6);
    CHECK(v.size() == 2 * v.genus() + v.components() - 1);
    CHECK(max_entry(v.matrix()) <= 3);
    ++sizes[std::size_t(v.size())];
  }
  for (int n = 1; n <= 6; ++n) CHECK(sizes[std::size_t(n)] > 0);
  for (int k = 0; k < 20; ++k) {
    SeifertData v = random_knot_seifert(rng);
    CHECK(v.components() == 1);
    CHECK(max_entry(v.matrix()) <= 3);
  }
}
