#include "linkbound/bounds.hpp"

#include <algorithm>
#include <sstream>

namespace linkbound {
namespace {

int ceil_half(int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

}  // namespace

std::string to_string(SliceVerdict v) {
  switch (v) {
    case SliceVerdict::obstructed:
      return "obstructed";
    case SliceVerdict::consistent_with_slice:
      return "consistent-with-slice";
    case SliceVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

SliceVerdict parse_slice_verdict(const std::string& text) {
  if (text == "obstructed") return SliceVerdict::obstructed;
  if (text == "consistent-with-slice") return SliceVerdict::consistent_with_slice;
  if (text == "inconclusive") return SliceVerdict::inconclusive;
  throw std::invalid_argument("unknown slice verdict '" + text + "'");
}

void BoundReport::check_consistent() const {
  if (lower < 0) throw InconsistentBounds("negative lower bound " + std::to_string(lower));
  if (!upper || lower <= *upper) return;
  std::ostringstream msg;
  msg << "inconsistent bounds for '" << label << "': lower " << lower << " exceeds upper " << *upper;
  for (const auto& p : provenance) {
    msg << "\n  " << p.bound << " " << p.value << " from " << p.source;
    if (!p.detail.empty()) msg << " (" << p.detail << ")";
  }
  throw InconsistentBounds(msg.str());
}

LowerBound lt_lower_bound(const SeifertData& v) {
  LowerBound out;
  out.function = signature_function(v);
  out.components = v.components();
  out.beta = link_nullity(v);
  if (!out.function.singular_family && out.beta != 0) {
    throw std::logic_error("internal inconsistency: nonzero Alexander polynomial with nullity " +
                           std::to_string(out.beta));
  }
  out.max_abs_sigma = out.function.max_abs_sigma();
  out.bound = std::max(0, ceil_half(out.max_abs_sigma + out.components - 1 - out.beta));
  out.witness_interval = out.function.witness_interval();
  out.witness = CirclePoint::at(out.function.intervals.at(out.witness_interval).sample);
  return out;
}

int width_upper_bound(const Laurent& delta) { return ceil_half(width(delta)); }

BandCertificate parse_band_certificate(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("band certificate '" + text + "': expected b,u");
  try {
    std::size_t used = 0;
    BandCertificate c;
    std::string b = text.substr(0, comma);
    std::string u = text.substr(comma + 1);
    c.bands = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    c.unlink_components = std::stoi(u, &used);
    if (used != u.size()) throw std::invalid_argument("");
    return c;
  } catch (const std::exception&) {
    throw std::invalid_argument("band certificate '" + text + "': expected two integers b,u");
  }
}

int band_certificate_genus(const BandCertificate& cert, int components) {
  const int b = cert.bands;
  const int u = cert.unlink_components;
  auto describe = [&] { return "(b=" + std::to_string(b) + ", u=" + std::to_string(u) + ")"; };
  if (components < 1) throw std::invalid_argument("band certificate: components must be positive");
  if (b < 0 || u < 1) throw InvalidDeclaration("invalid certificate " + describe() + ": need b >= 0 and u >= 1");
  const int twice = b - u + components;
  if (twice % 2 != 0) {
    throw InvalidDeclaration("invalid certificate " + describe() + ": chi = u - b = " + std::to_string(u - b) +
                             " has the wrong parity for " + std::to_string(components) + " boundary component(s)");
  }
  if (twice < 0) {
    throw InvalidDeclaration("invalid certificate " + describe() + ": too few bands to reach " +
                             std::to_string(u) + " components");
  }
  return twice / 2;
}

int seifert_genus_upper_bound(const SeifertData& v) {
  if (v.components() != 1) {
    throw std::invalid_argument("Seifert genus bound needs a knot; links have no single pushed-in surface bound");
  }
  return v.genus();
}

SliceResult slice_obstruction(const SeifertData& v, int degree_cap) {
  if (v.components() != 1) throw std::invalid_argument("slice obstruction is defined here for knots only");
  SliceResult out;
  out.fox_milnor = fox_milnor_test(alexander_from_seifert(v), degree_cap);
  out.signature_obstructs = lt_lower_bound(v).bound > 0;
  std::vector<std::string> reasons;
  if (out.fox_milnor.verdict == FoxMilnorVerdict::fails) {
    reasons.push_back("Fox-Milnor condition fails: " + out.fox_milnor.reason);
  }
  if (out.signature_obstructs) reasons.push_back("signature lower bound is positive");
  if (!reasons.empty()) {
    out.verdict = SliceVerdict::obstructed;
  } else if (out.fox_milnor.verdict == FoxMilnorVerdict::passes) {
    out.verdict = SliceVerdict::consistent_with_slice;
    reasons.push_back("Fox-Milnor factorization found and signatures vanish");
  } else {
    out.verdict = SliceVerdict::inconclusive;
    reasons.push_back(out.fox_milnor.reason);
  }
  for (std::size_t k = 0; k < reasons.size(); ++k) out.reason += (k ? "; " : "") + reasons[k];
  return out;
}

void InfectionDecl::validate(int components) const {
  if (axes < 1) throw InvalidDeclaration("infection declaration: need at least one axis");
  if (double_points < 0) throw InvalidDeclaration("infection declaration: double point count must be >= 0");
  if (static_cast<int>(linking_numbers.size()) != axes) {
    throw InvalidDeclaration("infection declaration: " + std::to_string(linking_numbers.size()) +
                             " linking-number rows for " + std::to_string(axes) + " axes");
  }
  for (const auto& row : linking_numbers) {
    if (static_cast<int>(row.size()) != components) {
      throw InvalidDeclaration("infection declaration: linking-number row of length " + std::to_string(row.size()) +
                               ", base link has " + std::to_string(components) + " components");
    }
  }
  if (!milnor_vanishing_length) {
    throw InvalidDeclaration("infection hypotheses not declared: missing milnor_vanishing_length");
  }
  if (*milnor_vanishing_length < 2 * double_points) {
    throw InvalidDeclaration("infection hypotheses not declared: mu-bar invariants vanish to length " +
                             std::to_string(*milnor_vanishing_length) + " but 2c = " +
                             std::to_string(2 * double_points) + " is required");
  }
}

bool InfectionDecl::axes_null_homologous() const {
  for (const auto& row : linking_numbers)
    for (const auto& lk : row)
      if (lk != 0) return false;
  return true;
}

BoundReport infection_transfer(const BoundReport& base, const SeifertData& v_base, const InfectionDecl& decl) {
  decl.validate(v_base.components());
  if (base.components != v_base.components()) {
    throw InvalidDeclaration("base report has " + std::to_string(base.components) +
                             " components but the Seifert data has " + std::to_string(v_base.components()));
  }
  BoundReport out;
  out.label = "S(" + (base.label.empty() ? std::string("L") : base.label) + ", J)";
  out.components = base.components;
  out.assumptions = base.assumptions;
  const std::string c = std::to_string(decl.double_points);
  if (decl.double_points == 0) {
    out.assumptions.push_back("declared: the " + std::to_string(decl.axes) +
                              " infection axes bound disjoint embedded discs in D^4 (c = 0)");
  } else {
    out.assumptions.push_back("declared: the " + std::to_string(decl.axes) +
                              " infection axes bound immersed discs in D^4 with c = " + c +
                              " intersection and self-intersection points in total");
    out.assumptions.push_back("declared: Milnor mu-bar invariants of the axes vanish up to length " +
                              std::to_string(*decl.milnor_vanishing_length) + " (>= 2c = " +
                              std::to_string(2 * decl.double_points) + ")");
  }
  if (!decl.notes.empty()) out.notes.push_back(decl.notes);

  if (base.upper) {
    out.upper = base.upper;
    Provenance p;
    p.bound = "upper";
    p.value = *base.upper;
    p.source = "infection carries the base surfaces";
    p.category = "topological";
    p.detail = "valid under the declared assumptions";
    out.provenance.push_back(p);
  }

  if (decl.axes_null_homologous()) {
    out.lower = base.lower;
    out.slice_verdict = base.slice_verdict;
    for (const auto& p : base.provenance) {
      if (p.bound != "lower") continue;
      Provenance q = p;
      q.detail = (q.detail.empty() ? std::string() : q.detail + "; ") +
                 "unchanged by infection: axes are null-homologous, hence in the commutator subgroup, so the "
                 "Seifert form is unchanged";
      out.provenance.push_back(q);
    }
    out.notes.push_back("all linking numbers vanish; signature, nullity and Alexander polynomial carry over");
  } else {
    out.lower = 0;
    out.slice_verdict = SliceVerdict::inconclusive;
    out.notes.push_back("an axis links the base link nontrivially; the Seifert form may change, so no lower bound "
                        "is transferred");
  }
  out.check_consistent();
  return out;
}

BoundReport assemble_report(const SeifertData& v, const std::vector<BandCertificate>& certs, int degree_cap) {
  BoundReport r;
  r.label = v.label();
  r.components = v.components();

  LowerBound lb = lt_lower_bound(v);
  r.lower = lb.bound;
  {
    Provenance p;
    p.bound = "lower";
    p.value = lb.bound;
    p.source = "Levine-Tristram signature";
    p.category = "topological";
    std::ostringstream d;
    d << "max |sigma| = " << lb.max_abs_sigma << " at x = " << to_string(lb.witness.x()) << ", m = "
      << lb.components << ", beta = " << lb.beta;
    p.detail = d.str();
    r.provenance.push_back(p);
  }

  auto add_upper = [&r](int value, std::string source, std::string category, std::string detail) {
    r.provenance.push_back({"upper", value, std::move(source), std::move(category), std::move(detail)});
    r.upper = r.upper ? std::min(*r.upper, value) : value;
  };

  if (v.components() == 1) {
    Laurent delta = alexander_from_seifert(v);
    add_upper(width_upper_bound(delta), "Alexander-width", "topological",
              "width " + std::to_string(width(delta)) + " of " + to_string(delta));
    add_upper(seifert_genus_upper_bound(v), "pushed-in Seifert surface", "smooth",
              "genus " + std::to_string(v.genus()) + " surface");
  }
  for (const auto& c : certs) {
    add_upper(band_certificate_genus(c, v.components()), "band-move certificate (user-supplied)", "smooth",
              std::to_string(c.bands) + " bands to a " + std::to_string(c.unlink_components) +
                  "-component unlink");
  }

  if (v.components() == 1) {
    SliceResult s = slice_obstruction(v, degree_cap);
    r.slice_verdict = s.verdict;
    r.notes.push_back("slice: " + s.reason);
  } else {
    r.slice_verdict = lb.bound > 0 ? SliceVerdict::obstructed : SliceVerdict::inconclusive;
  }
  if (r.upper && *r.upper == 0 && r.slice_verdict == SliceVerdict::inconclusive) {
    r.slice_verdict = SliceVerdict::consistent_with_slice;
  }
  r.check_consistent();
  return r;
}

}  // namespace linkbound
