#include <random>

#include <doctest.h>

#include "linkbound/bounds.hpp"
#include "linkbound/random_data.hpp"

using namespace linkbound;

namespace {

SeifertData trefoil() { return SeifertData(int_matrix({{-1, 1}, {0, -1}}), 1, "trefoil"); }
SeifertData empty() { return SeifertData(IntMatrix(0, 0), 1, "unknot"); }
SeifertData t35() { return seifert_matrix_from_braid(torus_braid(3, 5), "T(3,5)"); }
SeifertData stevedore() { return SeifertData(int_matrix({{-1, 1}, {0, 2}}), 1, "6_1"); }

InfectionDecl declaration(std::vector<std::vector<Integer>> lk, int c, std::optional<int> length) {
  InfectionDecl d;
  d.axes = static_cast<int>(lk.size());
  d.linking_numbers = std::move(lk);
  d.double_points = c;
  d.milnor_vanishing_length = length;
  return d;
}

}  // namespace

TEST_CASE("signature lower bound") {
  CHECK(lt_lower_bound(empty()).bound == 0);
  LowerBound t = lt_lower_bound(trefoil());
  CHECK(t.bound == 1);
  CHECK(t.max_abs_sigma == 2);
  CHECK(t.beta == 0);
  CHECK(lt_lower_bound(t35()).bound == 4);
  LowerBound hopf = lt_lower_bound(SeifertData(int_matrix({{1}}), 2));
  CHECK(hopf.bound == 1);  // ceil((1 + 1 - 0) / 2)
  LowerBound unlink = lt_lower_bound(SeifertData(int_matrix({{0}}), 2));
  CHECK(unlink.bound == 0);
  CHECK(unlink.beta == 1);
}

TEST_CASE("width bound") {
  CHECK(width_upper_bound(Laurent(1)) == 0);
  CHECK(width_upper_bound(parse_laurent("t^2-t+1")) == 1);
  CHECK(width_upper_bound(parse_laurent("t^8-t^7+t^5-t^4+t^3-t+1") * parse_laurent("2t^2-5t+2")) == 5);
}

TEST_CASE("band certificates") {
  CHECK(band_certificate_genus({11, 4}) == 4);
  CHECK(band_certificate_genus({0, 1}) == 0);
  CHECK(band_certificate_genus({2, 3}) == 0);
  CHECK(band_certificate_genus({3, 2}) == 1);
  CHECK(band_certificate_genus({1, 1}, 2) == 1);  // Hopf link: one band to the unknot
  CHECK(parse_band_certificate("11,4") == BandCertificate{11, 4});
  CHECK_THROWS_AS(parse_band_certificate("11"), std::invalid_argument);
  CHECK_THROWS_AS(band_certificate_genus({0, 3}), InvalidDeclaration);  // negative genus
}

TEST_CASE("band certificate parity guard rejects every u - b even") {
  for (int b = 0; b <= 12; ++b) {
    for (int u = 1; u <= 12; ++u) {
      if ((u - b) % 2 == 0) {
        CHECK_THROWS_AS(band_certificate_genus({b, u}), InvalidDeclaration);
      }
    }
  }
}

TEST_CASE("Seifert genus bound") {
  CHECK(seifert_genus_upper_bound(empty()) == 0);
  CHECK(seifert_genus_upper_bound(trefoil()) == 1);
  CHECK(seifert_genus_upper_bound(t35()) == 4);
  CHECK_THROWS(seifert_genus_upper_bound(SeifertData(int_matrix({{1}}), 2)));
}

TEST_CASE("slice obstruction") {
  CHECK(slice_obstruction(empty()).verdict == SliceVerdict::consistent_with_slice);
  SliceResult t = slice_obstruction(trefoil());
  CHECK(t.verdict == SliceVerdict::obstructed);
  CHECK(t.signature_obstructs);
  CHECK(slice_obstruction(connected_sum(t35(), stevedore())).verdict == SliceVerdict::obstructed);
  CHECK(slice_obstruction(stevedore()).verdict == SliceVerdict::consistent_with_slice);
}

TEST_CASE("K # -K is consistent with slice") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 20; ++k) {
    SeifertData v = random_knot_seifert(rng, 4);
    SliceResult r = slice_obstruction(connected_sum(v, mirror(v)));
    CHECK(r.verdict == SliceVerdict::consistent_with_slice);
    CHECK_FALSE(r.signature_obstructs);
  }
}

TEST_CASE("assembled reports") {
  BoundReport u = assemble_report(empty(), {});
  CHECK(u.lower == 0);
  CHECK(u.upper == 0);
  CHECK(u.exact());
  CHECK(u.slice_verdict == SliceVerdict::consistent_with_slice);

  BoundReport t = assemble_report(t35(), {});
  CHECK(t.lower == 4);
  CHECK(t.upper == 4);
  CHECK(t.exact());

  BoundReport tr = assemble_report(trefoil(), {{3, 2}});
  CHECK(tr.lower == 1);
  CHECK(tr.upper == 1);

  BoundReport k = assemble_report(connected_sum(t35(), stevedore()), {{11, 4}});
  CHECK(k.lower == 4);
  CHECK(k.upper == 4);
  CHECK(k.slice_verdict == SliceVerdict::obstructed);

  BoundReport hopf = assemble_report(SeifertData(int_matrix({{1}}), 2), {});
  CHECK(hopf.lower == 1);
  CHECK_FALSE(hopf.upper);
  CHECK(assemble_report(SeifertData(int_matrix({{1}}), 2), {{1, 1}}).upper == 1);

  // A certificate claiming genus 0 for the trefoil contradicts the signature.
  CHECK_THROWS_AS(assemble_report(trefoil(), {{2, 3}}), InconsistentBounds);
}

TEST_CASE("no false certificates on random braid knots") {
  std::mt19937_64 rng(59);
  for (int k = 0; k < 100; ++k) {
    const int n = uniform(rng, 2, 4);
    SeifertData v = seifert_matrix_from_braid(random_knot_braid(rng, n, uniform(rng, n, 11)));
    BoundReport r = assemble_report(v, {});
    REQUIRE(r.upper);
    CHECK(r.lower <= *r.upper);
    for (const auto& p : r.provenance) {
      if (p.bound == "upper") CHECK(r.lower <= p.value);
    }
  }
}

TEST_CASE("lower bound is mirror invariant and adds up at a common witness") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 30; ++k) {
    SeifertData a = random_knot_seifert(rng, 4);
    SeifertData b = random_knot_seifert(rng, 4);
    CHECK(lt_lower_bound(mirror(a)).bound == lt_lower_bound(a).bound);

    LowerBound sum = lt_lower_bound(connected_sum(a, b));
    SignatureFunction fa = signature_function(a);
    SignatureFunction fb = signature_function(b);
    SignatureEngine ea(b_family(a));
    SignatureEngine eb(b_family(b));
    // Every interval sample of the sum is a point where both summands are
    // generic; the summed value there bounds the sum's bound from below.
    for (const auto& iv : sum.function.intervals) {
      CirclePoint p = CirclePoint::at(iv.sample);
      Rational s = ea.value_at(p, fa).sigma + eb.value_at(p, fb).sigma;
      CHECK(s == iv.sigma);
      const long implied = ceil(abs(s) / 2).convert_to<long>();
      CHECK(sum.bound >= implied);
    }
  }
}

TEST_CASE("infection transfer") {
  BoundReport base = assemble_report(connected_sum(t35(), stevedore()), {{11, 4}});
  SeifertData v = connected_sum(t35(), stevedore());

  BoundReport r = infection_transfer(base, v, declaration({{0}, {0}}, 3, 6));
  CHECK(r.lower == 4);
  CHECK(r.upper == 4);
  CHECK(r.exact());
  CHECK(r.assumptions.size() == 2);

  BoundReport c0 = infection_transfer(base, v, declaration({{0}}, 0, 0));
  CHECK(c0.lower == 4);
  CHECK(c0.upper == 4);
  CHECK(c0.assumptions.size() == 1);

  BoundReport linked = infection_transfer(base, v, declaration({{0}, {2}}, 3, 6));
  CHECK(linked.lower == 0);
  CHECK(linked.upper == 4);
  CHECK_FALSE(linked.assumptions.empty());

  CHECK_THROWS_AS(infection_transfer(base, v, declaration({{0}}, 3, 5)), InvalidDeclaration);
  CHECK_THROWS_AS(infection_transfer(base, v, declaration({{0}}, 3, std::nullopt)), InvalidDeclaration);
  CHECK_THROWS_AS(infection_transfer(base, v, declaration({{0, 0}}, 0, 0)), InvalidDeclaration);
}

TEST_CASE("infection preserves bounds exactly with null-homologous axes") {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 20; ++k) {
    SeifertData v = random_knot_seifert(rng, 4);
    BoundReport base = assemble_report(v, {});
    const int c = uniform(rng, 0, 4);
    BoundReport r = infection_transfer(base, v, declaration({{0}}, c, 2 * c));
    CHECK(r.lower == base.lower);
    CHECK(r.upper == base.upper);
    BoundReport s = infection_transfer(base, v, declaration({{uniform(rng, 1, 3)}}, c, 2 * c));
    CHECK(s.lower == 0);
    CHECK(s.upper == base.upper);
  }
}
