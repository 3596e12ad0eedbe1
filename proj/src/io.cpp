#include "linkbound/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace linkbound {
namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

std::string string_or_empty(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) throw SchemaError(std::string(key) + ": expected a string");
  return it->get<std::string>();
}

std::vector<std::string> strings(const json& j, const char* key) {
  std::vector<std::string> out;
  auto it = j.find(key);
  if (it == j.end()) return out;
  if (!it->is_array()) throw SchemaError(std::string(key) + ": expected an array of strings");
  for (const auto& s : *it) {
    if (!s.is_string()) throw SchemaError(std::string(key) + ": expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::string decimal(double v) {
  if (v == 0) v = 0;  // no "-0"
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

json interval_to_json(const IsolatingInterval& iv) {
  json j = {{"lo", rational_to_json(iv.lo)}, {"hi", rational_to_json(iv.hi)}, {"multiplicity", iv.multiplicity}};
  if (iv.exact) j["exact"] = rational_to_json(*iv.exact);
  return j;
}

IsolatingInterval interval_from_json(const json& j) {
  IsolatingInterval iv;
  iv.lo = rational_from_json(field(j, "lo", "interval"), "interval.lo");
  iv.hi = rational_from_json(field(j, "hi", "interval"), "interval.hi");
  iv.multiplicity = int_field(j, "multiplicity", "interval");
  if (j.contains("exact")) iv.exact = rational_from_json(j["exact"], "interval.exact");
  return iv;
}

json endpoint_to_json(const EndpointValue& e) {
  return {{"x", rational_to_json(e.x)},
          {"sigma", rational_to_json(e.sigma)},
          {"unaveraged", e.unaveraged},
          {"nullity", e.nullity}};
}

EndpointValue endpoint_from_json(const json& j) {
  EndpointValue e;
  e.x = rational_from_json(field(j, "x", "endpoint"), "endpoint.x");
  e.sigma = rational_from_json(field(j, "sigma", "endpoint"), "endpoint.sigma");
  e.unaveraged = int_field(j, "unaveraged", "endpoint");
  e.nullity = int_field(j, "nullity", "endpoint");
  return e;
}

}  // namespace

json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return to_string(v);
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k < s.size() && s.find_first_not_of("0123456789", k) == std::string::npos) return Integer(s);
  }
  throw SchemaError(where + ": expected an integer");
}

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw SchemaError(where + ": expected a rational \"p/q\"");
}

json laurent_to_json(const Laurent& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = integer_to_json(c);
  return j;
}

Laurent laurent_from_json(const json& j) {
  if (j.is_string()) return parse_laurent(j.get<std::string>());
  if (!j.is_object()) throw SchemaError("polynomial: expected an object or a string");
  if (j.contains("coefficients")) {
    const json& cs = j["coefficients"];
    if (!cs.is_array()) throw SchemaError("polynomial.coefficients: expected an array");
    int low = j.contains("min_exponent") ? int_field(j, "min_exponent", "polynomial") : 0;
    std::vector<Integer> v;
    for (const auto& c : cs) v.push_back(integer_from_json(c, "polynomial.coefficients"));
    return Laurent(low, std::move(v));
  }
  Laurent out;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size()) throw SchemaError("polynomial: exponent key '" + key + "' is not an integer");
    out += Laurent::monomial(integer_from_json(value, "polynomial[" + key + "]"), e);
  }
  return out;
}

json polynomial_to_json(const PolyZ& p) {
  json j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(integer_to_json(c));
  return j;
}

PolyZ polynomial_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected a coefficient array");
  std::vector<Integer> v;
  for (const auto& c : j) v.push_back(integer_from_json(c, where));
  return PolyZ(std::move(v));
}

LinkInput link_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("input: expected a JSON object");
  const std::string label = string_or_empty(j, "label");
  LinkInput out;
  if (j.contains("braid")) {
    const json& b = j["braid"];
    BraidWord w;
    if (b.is_string()) {
      w = parse_braid(b.get<std::string>());
    } else {
      w.strands = int_field(b, "strands", "braid");
      const json& word = field(b, "word", "braid");
      if (!word.is_array()) throw SchemaError("braid.word: expected an array of integers");
      for (const auto& l : word) {
        if (!l.is_number_integer()) throw SchemaError("braid.word: expected an array of integers");
        w.letters.push_back(l.get<int>());
      }
      try {
        w.validate();
      } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("braid: ") + e.what());
      }
    }
    out.braid = w;
    out.seifert = seifert_matrix_from_braid(w, label);
    return out;
  }
  if (j.contains("seifert_matrix")) {
    const json& rows = j["seifert_matrix"];
    if (!rows.is_array()) throw SchemaError("seifert_matrix: expected an array of rows");
    const auto n = static_cast<Eigen::Index>(rows.size());
    IntMatrix v(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw SchemaError("seifert_matrix: row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        v(i, k) = integer_from_json(row[static_cast<std::size_t>(k)], "seifert_matrix");
      }
    }
    if (j.contains("components")) {
      out.seifert = SeifertData(std::move(v), int_field(j, "components", "input"), label);
    } else {
      out.seifert = SeifertData::infer_components(std::move(v), label);
    }
    return out;
  }
  throw SchemaError("input: expected a \"braid\" or \"seifert_matrix\" field");
}

json link_to_json(const LinkInput& input) {
  json j;
  if (!input.seifert.label().empty()) j["label"] = input.seifert.label();
  if (input.braid) {
    j["braid"] = {{"strands", input.braid->strands}, {"word", input.braid->letters}};
    return j;
  }
  json rows = json::array();
  const IntMatrix& v = input.seifert.matrix();
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < v.cols(); ++k) row.push_back(integer_to_json(v(i, k)));
    rows.push_back(row);
  }
  j["seifert_matrix"] = rows;
  j["components"] = input.seifert.components();
  return j;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    const std::size_t upto = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < upto; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column),
                     line, column);
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

json signature_function_to_json(const SignatureFunction& f) {
  json bps = json::array();
  for (const auto& b : f.breakpoints) {
    bps.push_back({{"polynomial", polynomial_to_json(b.location.polynomial)},
                   {"interval", interval_to_json(b.location.interval)},
                   {"approx", b.approx()},
                   {"left_sigma", b.left_sigma},
                   {"right_sigma", b.right_sigma},
                   {"sigma", rational_to_json(b.sigma)},
                   {"nullity", b.nullity}});
  }
  json ivs = json::array();
  for (std::size_t j = 0; j < f.intervals.size(); ++j) {
    auto [lo, hi] = f.interval_bounds(j);
    ivs.push_back({{"sample", rational_to_json(f.intervals[j].sample)},
                   {"sigma", f.intervals[j].sigma},
                   {"nullity", f.intervals[j].nullity},
                   {"x_lo", lo},
                   {"x_hi", hi}});
  }
  return {{"size", f.size},
          {"singular_family", f.singular_family},
          {"breakpoint_polynomial", polynomial_to_json(f.breakpoint_polynomial)},
          {"breakpoints", bps},
          {"intervals", ivs},
          {"endpoints", {{"minus_two", endpoint_to_json(f.minus_two)}, {"plus_two", endpoint_to_json(f.plus_two)}}},
          {"max_abs_sigma", f.max_abs_sigma()}};
}

SignatureFunction signature_function_from_json(const json& j) {
  const std::string where = "signature_function";
  SignatureFunction f;
  f.size = int_field(j, "size", where);
  const json& singular = field(j, "singular_family", where);
  if (!singular.is_boolean()) throw SchemaError(where + ".singular_family: expected a boolean");
  f.singular_family = singular.get<bool>();
  f.breakpoint_polynomial = polynomial_from_json(field(j, "breakpoint_polynomial", where), where);
  for (const auto& b : field(j, "breakpoints", where)) {
    Breakpoint bp;
    bp.location.polynomial = polynomial_from_json(field(b, "polynomial", "breakpoint"), "breakpoint.polynomial");
    bp.location.interval = interval_from_json(field(b, "interval", "breakpoint"));
    bp.left_sigma = int_field(b, "left_sigma", "breakpoint");
    bp.right_sigma = int_field(b, "right_sigma", "breakpoint");
    bp.sigma = rational_from_json(field(b, "sigma", "breakpoint"), "breakpoint.sigma");
    bp.nullity = int_field(b, "nullity", "breakpoint");
    f.breakpoints.push_back(std::move(bp));
  }
  for (const auto& iv : field(j, "intervals", where)) {
    SignatureInterval s;
    s.sample = rational_from_json(field(iv, "sample", "interval"), "interval.sample");
    s.sigma = int_field(iv, "sigma", "interval");
    s.nullity = int_field(iv, "nullity", "interval");
    f.intervals.push_back(s);
  }
  if (f.intervals.size() != f.breakpoints.size() + 1) {
    throw SchemaError(where + ": need exactly one more interval than breakpoints");
  }
  const json& ends = field(j, "endpoints", where);
  f.minus_two = endpoint_from_json(field(ends, "minus_two", "endpoints"));
  f.plus_two = endpoint_from_json(field(ends, "plus_two", "endpoints"));
  return f;
}

Invariants compute_invariants(const SeifertData& v) {
  Invariants inv;
  inv.label = v.label();
  inv.components = v.components();
  inv.genus = v.genus();
  inv.size = v.size();
  inv.alexander = alexander_from_seifert(v);
  if (!inv.alexander.is_zero()) inv.width = width(inv.alexander);
  inv.beta = link_nullity(v);
  inv.signature = signature_function(v);
  return inv;
}

json invariants_to_json(const Invariants& inv) {
  return {{"label", inv.label},
          {"components", inv.components},
          {"genus", inv.genus},
          {"size", inv.size},
          {"alexander", inv.alexander.is_zero() ? std::string("0") : to_string(inv.alexander)},
          {"alexander_terms", laurent_to_json(inv.alexander)},
          {"width", inv.width ? json(*inv.width) : json(nullptr)},
          {"beta", inv.beta},
          {"signature_function", signature_function_to_json(inv.signature)}};
}

Invariants invariants_from_json(const json& j) {
  const std::string where = "invariants";
  Invariants inv;
  inv.label = string_or_empty(j, "label");
  inv.components = int_field(j, "components", where);
  inv.genus = int_field(j, "genus", where);
  inv.size = int_field(j, "size", where);
  inv.alexander = laurent_from_json(field(j, "alexander_terms", where));
  const json& w = field(j, "width", where);
  if (!w.is_null()) inv.width = int_field(j, "width", where);
  inv.beta = int_field(j, "beta", where);
  inv.signature = signature_function_from_json(field(j, "signature_function", where));
  return inv;
}

json report_to_json(const BoundReport& r) {
  json prov = json::array();
  for (const auto& p : r.provenance) {
    prov.push_back({{"bound", p.bound},
                    {"value", p.value},
                    {"source", p.source},
                    {"category", p.category},
                    {"detail", p.detail}});
  }
  return {{"label", r.label},
          {"components", r.components},
          {"lower", r.lower},
          {"upper", r.upper ? json(*r.upper) : json("unknown")},
          {"exact", r.exact()},
          {"slice_verdict", to_string(r.slice_verdict)},
          {"provenance", prov},
          {"assumptions", r.assumptions},
          {"notes", r.notes}};
}

BoundReport report_from_json(const json& j) {
  const std::string where = "report";
  BoundReport r;
  r.label = string_or_empty(j, "label");
  r.components = j.contains("components") ? int_field(j, "components", where) : 1;
  r.lower = int_field(j, "lower", where);
  const json& up = field(j, "upper", where);
  if (up.is_number_integer()) {
    r.upper = up.get<int>();
  } else if (!(up.is_string() && up.get<std::string>() == "unknown")) {
    throw SchemaError("report.upper: expected an integer or \"unknown\"");
  }
  if (j.contains("slice_verdict")) {
    try {
      r.slice_verdict = parse_slice_verdict(field(j, "slice_verdict", where).get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError(std::string("report.slice_verdict: ") + e.what());
    }
  }
  if (j.contains("provenance")) {
    for (const auto& p : j["provenance"]) {
      Provenance q;
      q.bound = string_or_empty(p, "bound");
      q.value = int_field(p, "value", "provenance");
      q.source = string_or_empty(p, "source");
      q.category = string_or_empty(p, "category");
      q.detail = string_or_empty(p, "detail");
      r.provenance.push_back(std::move(q));
    }
  }
  r.assumptions = strings(j, "assumptions");
  r.notes = strings(j, "notes");
  if (j.contains("exact") && j["exact"].is_boolean() && j["exact"].get<bool>() != r.exact()) {
    throw SchemaError("report.exact disagrees with lower and upper");
  }
  return r;
}

InfectionDecl infection_from_json(const json& j) {
  const std::string where = "declaration";
  InfectionDecl d;
  d.axes = int_field(j, "axes", where);
  const json& lk = field(j, "linking_numbers", where);
  if (!lk.is_array()) throw SchemaError("declaration.linking_numbers: expected an array of rows");
  for (const auto& row : lk) {
    if (!row.is_array()) throw SchemaError("declaration.linking_numbers: expected an array of rows");
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(integer_from_json(v, "declaration.linking_numbers"));
    d.linking_numbers.push_back(std::move(r));
  }
  d.double_points = int_field(j, "c", where);
  d.milnor_vanishing_length = int_field(j, "milnor_vanishing_length", where);
  d.notes = string_or_empty(j, "notes");
  return d;
}

json infection_to_json(const InfectionDecl& d) {
  json lk = json::array();
  for (const auto& row : d.linking_numbers) {
    json r = json::array();
    for (const auto& v : row) r.push_back(integer_to_json(v));
    lk.push_back(r);
  }
  json j = {{"axes", d.axes}, {"linking_numbers", lk}, {"c", d.double_points}, {"notes", d.notes}};
  if (d.milnor_vanishing_length) j["milnor_vanishing_length"] = *d.milnor_vanishing_length;
  return j;
}

void write_signature_csv(std::ostream& out, const SeifertData& v, const SignatureFunction& f, int samples) {
  out << "x_lo,x_hi,sigma,nullity,source\n";
  for (std::size_t j = 0; j < f.intervals.size(); ++j) {
    auto [lo, hi] = f.interval_bounds(j);
    out << decimal(lo) << ',' << decimal(hi) << ',' << f.intervals[j].sigma << ',' << f.intervals[j].nullity
        << ",exact\n";
    if (j < f.breakpoints.size()) {
      const auto& b = f.breakpoints[j];
      const std::string x = decimal(b.approx());
      out << x << ',' << x << ',' << decimal(to_double(b.sigma)) << ',' << b.nullity << ",exact\n";
    }
  }
  const double pi = std::acos(-1.0);
  for (int k = samples - 1; k >= 0; --k) {
    const double theta = pi * (k + 0.5) / samples;
    const FloatSignature s = float_oracle(v, theta);
    const std::string x = decimal(2 * std::cos(theta));
    out << x << ',' << x << ',' << s.sigma << ',' << s.nullity << ",oracle\n";
  }
}

std::string dump(const json& j, int indent) { return j.dump(indent < 0 ? -1 : indent); }

}  // namespace linkbound
