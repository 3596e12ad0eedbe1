#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace linkbound {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs the ten acceptance criteria. Random suites draw from a generator
/// seeded with `seed`.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20261019);

/// One line per criterion: "[PASS] 3 exact bound ... (0.12 s / 5 s)".
void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace linkbound
