#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkbound/io.hpp"

namespace linkbound {

/// Expected 4-genus: lower and upper bound of the assembled report. A known
/// value has lower == upper.
struct ExpectedG4 {
  int lower = 0;
  std::optional<int> upper;
};

struct CatalogEntry {
  std::string name;
  json input;  // link document, see link_from_json
  std::vector<BandCertificate> band_certs;
  std::optional<Laurent> alexander;  // compared up to units; zero allowed
  std::optional<int> max_abs_sigma;
  std::optional<ExpectedG4> g4;
  std::string note;
};

std::vector<CatalogEntry> builtin_catalog();

/// {"entries": [{"name", "input", "expected": {"alexander", "max_abs_sigma",
/// "g4"}, "band_certs": ["b,u"], "note"}]}; "g4" is an integer or a pair
/// [lower, upper] with null for an unknown upper bound.
std::vector<CatalogEntry> catalog_from_json(const json& j);
json catalog_to_json(const std::vector<CatalogEntry>& entries);

struct EntryCheck {
  std::string name;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Recomputes every expectation of every entry.
std::vector<EntryCheck> verify_catalog(const std::vector<CatalogEntry>& entries, int degree_cap = 12);

}  // namespace linkbound
