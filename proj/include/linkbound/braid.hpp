#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "linkbound/errors.hpp"

namespace linkbound {

/// Word in the Artin generators on `strands` strands. Letter +i is sigma_i
/// (a positive crossing between strands i and i+1), -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  /// Throws std::invalid_argument when a letter is out of range.
  void validate() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Accepts "strands=3; 1 2 -1" and the token forms "s1", "s2^-1", "S2^{-1}".
BraidWord parse_braid(const std::string& text);

/// Inverse of parse_braid: "strands=3; 1 2 -1".
std::string to_string(const BraidWord& b);

/// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands.
BraidWord torus_braid(int p, int q);

/// Permutation of strand positions induced by the braid, 0-based.
std::vector<int> braid_permutation(const BraidWord& b);

/// Number of components of the closure: cycles of the induced permutation.
int closure_components(const BraidWord& b);

}  // namespace linkbound
