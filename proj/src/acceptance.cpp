#include "linkbound/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "linkbound/catalog.hpp"
#include "linkbound/random_data.hpp"

namespace linkbound {
namespace {

struct Check {
  bool ok = true;
  std::string detail;
};

CriterionResult timed(int id, std::string title, double budget, const std::function<Check()>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.budget_seconds = budget;
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = c.ok && r.seconds < budget;
  r.detail = c.detail;
  if (c.ok && r.seconds >= budget) r.detail += " (over time budget)";
  return r;
}

const Laurent& t35_alexander() {
  static const Laurent p = parse_laurent("t^8-t^7+t^5-t^4+t^3-t+1");
  return p;
}

SeifertData t35() { return seifert_matrix_from_braid(torus_braid(3, 5), "T(3,5)"); }

// Value of the sum of two signature functions against the function of the
// connected sum, on every interval and breakpoint of the latter.
std::string additivity_mismatch(const SeifertData& a, const SeifertData& b) {
  SignatureEngine ea(b_family(a));
  SignatureEngine eb(b_family(b));
  SignatureEngine es(b_family(connected_sum(a, b)));
  const SignatureFunction fa = ea.signature_function();
  const SignatureFunction fb = eb.signature_function();
  const SignatureFunction fs = es.signature_function();
  for (const auto& iv : fs.intervals) {
    CirclePoint p = CirclePoint::at(iv.sample);
    SignatureValue va = ea.value_at(p, fa);
    SignatureValue vb = eb.value_at(p, fb);
    if (va.sigma + vb.sigma != iv.sigma || va.nullity + vb.nullity != iv.nullity) {
      return "interval value at x = " + to_string(iv.sample);
    }
  }
  for (const auto& bp : fs.breakpoints) {
    CirclePoint p = CirclePoint::algebraic(bp.location.polynomial, bp.location.interval);
    SignatureValue va = ea.value_at(p, fa);
    SignatureValue vb = eb.value_at(p, fb);
    if (va.sigma + vb.sigma != bp.sigma || va.nullity + vb.nullity != bp.nullity) {
      return "breakpoint near x = " + std::to_string(bp.approx());
    }
  }
  if (fa.minus_two.unaveraged + fb.minus_two.unaveraged != fs.minus_two.unaveraged) return "value at x = -2";
  return {};
}

std::string mirror_mismatch(const SeifertData& v) {
  const SignatureFunction f = signature_function(v);
  const SignatureFunction g = signature_function(mirror(v));
  if (f.breakpoints.size() != g.breakpoints.size()) return "breakpoint count";
  for (std::size_t j = 0; j < f.intervals.size(); ++j) {
    if (f.intervals[j].sigma != -g.intervals[j].sigma || f.intervals[j].nullity != g.intervals[j].nullity) {
      return "interval " + std::to_string(j);
    }
  }
  for (std::size_t j = 0; j < f.breakpoints.size(); ++j) {
    if (!same_point(f.breakpoints[j].location, g.breakpoints[j].location)) return "breakpoint location";
    if (f.breakpoints[j].sigma != -g.breakpoints[j].sigma || f.breakpoints[j].nullity != g.breakpoints[j].nullity) {
      return "breakpoint " + std::to_string(j);
    }
  }
  if (f.minus_two.unaveraged != -g.minus_two.unaveraged) return "value at x = -2";
  return {};
}

std::string stabilization_mismatch(const SeifertData& v, StabilizeDirection dir, const IntVector& w) {
  SeifertData s = stabilize(v, dir, w);
  Laurent a = alexander_from_seifert(v);
  Laurent b = alexander_from_seifert(s);
  if (a.is_zero() != b.is_zero() || (!a.is_zero() && !equal_up_to_units(a, b))) return "Alexander polynomial";
  std::string why;
  if (!same_signature_function(signature_function(v), signature_function(s), &why)) return why;
  return {};
}

// Direct one-sided values at the ends of each isolating interval.
std::string mean_mismatch(const SeifertData& v) {
  SignatureEngine e(b_family(v));
  const SignatureFunction f = e.signature_function();
  for (std::size_t j = 0; j < f.breakpoints.size(); ++j) {
    const auto& b = f.breakpoints[j];
    const IsolatingInterval& iv = b.location.interval;
    const int left = e.inertia_at(iv.lo).signature();
    const int right = e.inertia_at(iv.hi).signature();
    if (b.sigma != Rational(left + right, 2)) return "breakpoint " + std::to_string(j) + " is not the mean";
    if (b.left_sigma != left || b.right_sigma != right) return "breakpoint " + std::to_string(j) + " neighbours";
    if (iv.exact && e.inertia_at(*iv.exact).zero != b.nullity) return "nullity at exact breakpoint";
  }
  return {};
}

IntVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  IntVector w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = Integer(uniform(rng, -3, 3));
  return w;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  std::mt19937_64 rng(seed);

  out.push_back(timed(1, "Alexander polynomial of T(3,5)", 1.0, [] {
    Laurent d = alexander_from_seifert(t35());
    return Check{d == t35_alexander(), "got " + to_string(d)};
  }));

  out.push_back(timed(2, "max |sigma| of T(3,5) is 8 near x = -2", 5.0, [] {
    SignatureFunction f = signature_function(t35());
    const int s0 = f.intervals.front().sigma;
    std::ostringstream d;
    d << "max |sigma| = " << f.max_abs_sigma() << ", sigma on the interval at x = -2 is " << s0;
    return Check{f.max_abs_sigma() == 8 && std::abs(s0) == 8, d.str()};
  }));

  out.push_back(timed(3, "assembled report for T(3,5) is exact at 4", 5.0, [] {
    BoundReport r = assemble_report(t35(), {});
    std::ostringstream d;
    d << "lower " << r.lower << ", upper " << (r.upper ? std::to_string(*r.upper) : "unknown");
    return Check{r.lower == 4 && r.upper == 4 && r.exact(), d.str()};
  }));

  out.push_back(timed(4, "width 10 and width bound 5 for the product polynomial", 1.0, [] {
    Laurent p = t35_alexander() * parse_laurent("2t^2-5t+2");
    std::ostringstream d;
    d << "width " << width(p) << ", bound " << width_upper_bound(p);
    return Check{width(p) == 10 && width_upper_bound(p) == 5, d.str()};
  }));

  out.push_back(timed(5, "band certificate (11, 4) gives genus 4", 1.0, [] {
    int g = band_certificate_genus({11, 4});
    return Check{g == 4, "genus " + std::to_string(g)};
  }));

  out.push_back(timed(6, "Fox-Milnor fails on the product, passes on 2t^2-5t+2", 10.0, [] {
    FoxMilnorResult bad = fox_milnor_test(t35_alexander() * parse_laurent("2t^2-5t+2"), 12);
    FoxMilnorResult good = fox_milnor_test(parse_laurent("2t^2-5t+2"), 12);
    const bool witness_ok = good.witness && *good.witness == parse_laurent("t-2");
    std::string d = "product: " + to_string(bad.verdict) + "; 2t^2-5t+2: " + to_string(good.verdict);
    if (good.witness) d += " with f = " + to_string(*good.witness);
    return Check{bad.verdict == FoxMilnorVerdict::fails && good.verdict == FoxMilnorVerdict::passes && witness_ok,
                 d};
  }));

  out.push_back(timed(7, "infection transfer keeps {4, 4}", 1.0, [] {
    SeifertData v = t35();
    BoundReport base = assemble_report(v, {});
    InfectionDecl decl;
    decl.axes = 2;
    decl.linking_numbers = {{Integer(0)}, {Integer(0)}};
    decl.double_points = 3;
    decl.milnor_vanishing_length = 6;
    BoundReport r = infection_transfer(base, v, decl);
    std::ostringstream d;
    d << "lower " << r.lower << ", upper " << (r.upper ? std::to_string(*r.upper) : "unknown") << ", "
      << r.assumptions.size() << " assumptions";
    return Check{r.lower == 4 && r.upper == 4 && r.exact() && r.assumptions.size() >= 2, d.str()};
  }));

  out.push_back(timed(8, "exact signature equals float oracle (100 x 20)", 60.0, [&rng] {
    const double pi = std::acos(-1.0);
    std::uniform_real_distribution<double> angle(0.0, pi);
    int disagreements = 0;
    int compared = 0;
    std::string first;
    for (int k = 0; k < 100; ++k) {
      SeifertData v = random_seifert(rng, 6, 3);
      SignatureEngine e(b_family(v));
      const SignatureFunction f = e.signature_function();
      std::vector<double> bps;
      for (const auto& b : f.breakpoints) bps.push_back(b.approx());
      int taken = 0;
      while (taken < 20) {
        const double theta = angle(rng);
        const double x = 2 * std::cos(theta);
        if (theta <= 0 || theta >= pi) continue;
        bool near = false;
        for (double b : bps) near = near || std::abs(x - b) <= 1e-3;
        if (near) continue;
        ++taken;
        ++compared;
        const Rational xr(x);  // exact value of the double
        const Rational exact = e.value_at(CirclePoint::at(xr), f).sigma;
        const FloatSignature approx = float_oracle(v, theta);
        if (exact != Rational(approx.sigma)) {
          ++disagreements;
          if (first.empty()) first = "; first at x = " + std::to_string(x);
        }
      }
    }
    return Check{disagreements == 0,
                 std::to_string(disagreements) + " disagreements in " + std::to_string(compared) + " samples" + first};
  }));

  out.push_back(timed(9, "invariance suite (sum, mirror, stabilization, averaging; 50 each)", 120.0, [&rng] {
    std::vector<std::string> bad;
    for (int k = 0; k < 50; ++k) {
      SeifertData a = random_knot_seifert(rng, 4, 3);
      SeifertData b = random_knot_seifert(rng, 4, 3);
      std::string m = additivity_mismatch(a, b);
      if (!m.empty()) bad.push_back("sum: " + m);
    }
    for (int k = 0; k < 50; ++k) {
      std::string m = mirror_mismatch(random_seifert(rng, 6, 3));
      if (!m.empty()) bad.push_back("mirror: " + m);
    }
    for (int k = 0; k < 50; ++k) {
      SeifertData v = random_seifert(rng, 4, 3);
      auto dir = uniform(rng, 0, 1) ? StabilizeDirection::row_first : StabilizeDirection::column_first;
      std::string m = stabilization_mismatch(v, dir, random_vector(rng, v.size()));
      if (!m.empty()) bad.push_back("stabilization: " + m);
    }
    int breakpoints = 0;
    for (int k = 0; k < 50; ++k) {
      SeifertData v = random_seifert(rng, 6, 3);
      breakpoints += static_cast<int>(signature_function(v).breakpoints.size());
      std::string m = mean_mismatch(v);
      if (!m.empty()) bad.push_back("averaging: " + m);
    }
    std::string d = std::to_string(bad.size()) + " failures over 200 instances (" + std::to_string(breakpoints) +
                    " breakpoints averaged)";
    if (!bad.empty()) d += "; first: " + bad.front();
    return Check{bad.empty(), d};
  }));

  out.push_back(timed(10, "nullity range on catalog and random inputs", 10.0, [&rng] {
    int checked = 0;
    for (const auto& c : builtin_catalog()) {
      SeifertData v = link_from_json(c.input).seifert;
      int b = link_nullity(v);  // throws outside [0, m - 1]
      (void)b;
      ++checked;
    }
    for (int k = 0; k < 100; ++k) {
      (void)link_nullity(random_seifert(rng, 6, 3));
      ++checked;
    }
    const int unlink = link_nullity(SeifertData(int_matrix({{0}}), 2));
    const int hopf = link_nullity(SeifertData(int_matrix({{1}}), 2));
    std::ostringstream d;
    d << checked << " inputs in range; unlink " << unlink << ", Hopf " << hopf;
    return Check{unlink == 1 && hopf == 0, d.str()};
  }));

  return out;
}

void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.title << ": " << r.detail << " ("
        << std::fixed << std::setprecision(3) << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds
        << " s)" << std::defaultfloat << "\n";
  }
}

}  // namespace linkbound
