#include "linkbound/catalog.hpp"

namespace linkbound {
namespace {

json braid_input(const std::string& label, int strands, std::vector<int> word) {
  return {{"label", label}, {"braid", {{"strands", strands}, {"word", std::move(word)}}}};
}

json matrix_input(const std::string& label, const std::vector<std::vector<int>>& rows, int components) {
  return {{"label", label}, {"seifert_matrix", rows}, {"components", components}};
}

std::vector<int> repeat(const std::vector<int>& w, int times) {
  std::vector<int> out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

CatalogEntry entry(std::string name, json input, const std::string& alexander, int sigma, ExpectedG4 g4,
                   std::string note = {}) {
  CatalogEntry e;
  e.name = std::move(name);
  e.input = std::move(input);
  e.alexander = parse_laurent(alexander);
  e.max_abs_sigma = sigma;
  e.g4 = g4;
  e.note = std::move(note);
  return e;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog() {
  // T(3,5) followed by the stevedore knot 6_1, a genus-one ribbon knot with
  // Alexander polynomial 2t^2-5t+2. It stands in for 11n139, which has the
  // same Alexander polynomial but no matrix on record here.
  std::vector<std::vector<int>> k = {
      {-1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  {1, -1, 0, 0, 0, 0, 0, 0, 0, 0},   {0, 1, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, -1, 0, 0, 0, 0, 0, 0},   {-1, 1, 0, 0, -1, 0, 0, 0, 0, 0},  {0, -1, 1, 0, 1, -1, 0, 0, 0, 0},
      {0, 0, -1, 1, 0, 1, -1, 0, 0, 0},  {0, 0, 0, -1, 0, 0, 1, -1, 0, 0},  {0, 0, 0, 0, 0, 0, 0, 0, -1, 1},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 2}};
  std::vector<CatalogEntry> out;
  out.push_back(entry("unknot", braid_input("unknot", 1, {}), "1", 0, {0, 0}));
  out.push_back(entry("trefoil", braid_input("trefoil", 2, {1, 1, 1}), "t^2-t+1", 2, {1, 1}));
  out.push_back(entry("figure-eight", braid_input("figure-eight", 3, {1, -2, 1, -2}), "t^2-3t+1", 0, {0, 1},
                      "slice obstructed by Fox-Milnor only; the signature bound is 0"));
  out.push_back(entry("T(2,5)", braid_input("T(2,5)", 2, {1, 1, 1, 1, 1}), "t^4-t^3+t^2-t+1", 4, {2, 2}));
  out.push_back(entry("T(3,4)", braid_input("T(3,4)", 3, repeat({1, 2}, 4)), "t^6-t^5+t^3-t+1", 6, {3, 3}));
  out.push_back(
      entry("T(3,5)", braid_input("T(3,5)", 3, repeat({1, 2}, 5)), "t^8-t^7+t^5-t^4+t^3-t+1", 8, {4, 4}));
  out.push_back(entry("6_1", matrix_input("6_1", {{-1, 1}, {0, 2}}, 1), "2t^2-5t+2", 0, {0, 1},
                      "stevedore knot; ribbon, but only the Fox-Milnor test sees that it may be slice"));
  out.push_back(entry("T(3,5)#6_1", matrix_input("T(3,5)#6_1", k, 1),
                      "2t^10-7t^9+7t^8-7t^6+9t^5-7t^4+7t^2-7t+2", 8, {4, 5},
                      "genus-one stand-in for the 11n139 summand; same Alexander polynomial"));
  out.push_back(entry("Hopf link", matrix_input("Hopf link", {{1}}, 2), "t-1", 1, {1, std::nullopt},
                      "annulus with one full twist"));
  out.push_back(entry("2-component unlink", matrix_input("2-component unlink", {{0}}, 2), "0", 0,
                      {0, std::nullopt}, "unknotted annulus; nullity 1"));
  return out;
}

std::vector<CatalogEntry> catalog_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw SchemaError("catalog: expected {\"entries\": [...]}");
  }
  std::vector<CatalogEntry> out;
  for (const auto& e : j["entries"]) {
    CatalogEntry c;
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string()) {
      throw SchemaError("catalog entry: missing name");
    }
    c.name = e["name"].get<std::string>();
    if (!e.contains("input")) throw SchemaError("catalog entry '" + c.name + "': missing input");
    c.input = e["input"];
    if (e.contains("band_certs")) {
      for (const auto& b : e["band_certs"]) {
        if (!b.is_string()) throw SchemaError("catalog entry '" + c.name + "': band_certs are \"b,u\" strings");
        c.band_certs.push_back(parse_band_certificate(b.get<std::string>()));
      }
    }
    if (e.contains("expected")) {
      const json& x = e["expected"];
      if (x.contains("alexander")) c.alexander = laurent_from_json(x["alexander"]);
      if (x.contains("max_abs_sigma")) c.max_abs_sigma = x["max_abs_sigma"].get<int>();
      if (x.contains("g4")) {
        const json& g = x["g4"];
        ExpectedG4 eg;
        if (g.is_number_integer()) {
          eg.lower = g.get<int>();
          eg.upper = eg.lower;
        } else if (g.is_array() && g.size() == 2 && g[0].is_number_integer()) {
          eg.lower = g[0].get<int>();
          if (!g[1].is_null()) eg.upper = g[1].get<int>();
        } else {
          throw SchemaError("catalog entry '" + c.name + "': g4 must be an integer or [lower, upper]");
        }
        c.g4 = eg;
      }
    }
    if (e.contains("note") && e["note"].is_string()) c.note = e["note"].get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  json list = json::array();
  for (const auto& c : entries) {
    json e = {{"name", c.name}, {"input", c.input}};
    json expected = json::object();
    if (c.alexander) expected["alexander"] = c.alexander->is_zero() ? std::string("0") : to_string(*c.alexander);
    if (c.max_abs_sigma) expected["max_abs_sigma"] = *c.max_abs_sigma;
    if (c.g4) {
      if (c.g4->upper && *c.g4->upper == c.g4->lower) {
        expected["g4"] = c.g4->lower;
      } else {
        expected["g4"] = {c.g4->lower, c.g4->upper ? json(*c.g4->upper) : json(nullptr)};
      }
    }
    e["expected"] = expected;
    if (!c.band_certs.empty()) {
      json certs = json::array();
      for (const auto& b : c.band_certs) certs.push_back(std::to_string(b.bands) + "," + std::to_string(b.unlink_components));
      e["band_certs"] = certs;
    }
    if (!c.note.empty()) e["note"] = c.note;
    list.push_back(e);
  }
  return {{"entries", list}};
}

std::vector<EntryCheck> verify_catalog(const std::vector<CatalogEntry>& entries, int degree_cap) {
  std::vector<EntryCheck> out;
  for (const auto& c : entries) {
    EntryCheck check;
    check.name = c.name;
    try {
      LinkInput in = link_from_json(c.input);
      const SeifertData& v = in.seifert;
      Invariants inv = compute_invariants(v);
      if (c.alexander) {
        const bool same = c.alexander->is_zero() ? inv.alexander.is_zero()
                                                  : !inv.alexander.is_zero() && equal_up_to_units(*c.alexander, inv.alexander);
        if (!same) {
          check.failures.push_back("alexander: expected " + to_string(*c.alexander) + ", got " +
                                   (inv.alexander.is_zero() ? std::string("0") : to_string(inv.alexander)));
        }
      }
      if (c.max_abs_sigma && *c.max_abs_sigma != inv.signature.max_abs_sigma()) {
        check.failures.push_back("max |sigma|: expected " + std::to_string(*c.max_abs_sigma) + ", got " +
                                 std::to_string(inv.signature.max_abs_sigma()));
      }
      if (inv.beta < 0 || inv.beta > v.components() - 1) {
        check.failures.push_back("nullity " + std::to_string(inv.beta) + " outside [0, m - 1]");
      }
      if (c.g4) {
        BoundReport r = assemble_report(v, c.band_certs, degree_cap);
        auto show = [](std::optional<int> u) { return u ? std::to_string(*u) : std::string("unknown"); };
        if (r.lower != c.g4->lower || r.upper != c.g4->upper) {
          check.failures.push_back("g4 bounds: expected [" + std::to_string(c.g4->lower) + ", " + show(c.g4->upper) +
                                   "], got [" + std::to_string(r.lower) + ", " + show(r.upper) + "]");
        }
      }
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("error: ") + e.what());
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace linkbound
