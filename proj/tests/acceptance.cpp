// Runs the acceptance criteria; exits nonzero when any of them fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "linkbound/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20261019;
  if (argc > 1) seed = std::stoull(argv[1]);
  auto results = linkbound::run_acceptance(seed);
  linkbound::print_acceptance(std::cout, results);
  for (const auto& r : results) {
    if (!r.passed) return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
