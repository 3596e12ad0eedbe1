#include "linkbound/random_data.hpp"

#include <algorithm>

namespace linkbound {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

SeifertData random_seifert(std::mt19937_64& rng, int max_size, int max_entry) {
  const int n = uniform(rng, 1, max_size);
  for (;;) {
    IntMatrix v(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(i, j) = Integer(uniform(rng, -max_entry, max_entry));
    try {
      return SeifertData::infer_components(std::move(v), "random");
    } catch (const InvalidSeifertData&) {
    }
  }
}

SeifertData random_knot_seifert(std::mt19937_64& rng, int max_size, int max_entry) {
  const int g = uniform(rng, 1, std::max(1, max_size / 2));
  const int n = 2 * g;
  IntMatrix v = filled<Integer>(n, n, Integer(0));
  for (int i = 0; i < n; ++i) {
    v(i, i) = Integer(uniform(rng, -max_entry, max_entry));
    for (int j = i + 1; j < n; ++j) {
      const int jij = (i % 2 == 0 && j == i + 1) ? 1 : 0;
      // V_ji = V_ij - J_ij must stay in range too.
      const int vij = uniform(rng, -max_entry + std::max(jij, 0), max_entry + std::min(jij, 0));
      v(i, j) = Integer(vij);
      v(j, i) = Integer(vij - jij);
    }
  }
  // Congruence by elementary matrices E = I + s e_a e_b^T: V -> E V E^T.
  const int moves = uniform(rng, 0, 4 * n);
  for (int k = 0; k < moves; ++k) {
    const int a = uniform(rng, 0, n - 1);
    const int b = uniform(rng, 0, n - 1);
    if (a == b) continue;
    const Integer s(uniform(rng, 0, 1) ? 1 : -1);
    IntMatrix w = v;
    w.row(a) += s * w.row(b);
    w.col(a) += s * w.col(b);
    bool small = true;
    for (Eigen::Index i = 0; i < n && small; ++i)
      for (Eigen::Index j = 0; j < n && small; ++j) small = abs(w(i, j)) <= max_entry;
    if (small) v = w;
  }
  return SeifertData(std::move(v), 1, "random knot");
}

BraidWord random_braid(std::mt19937_64& rng, int strands, int length) {
  BraidWord b;
  b.strands = strands;
  if (strands < 2) return b;
  for (;;) {
    b.letters.clear();
    for (int k = 0; k < length; ++k) {
      int g = uniform(rng, 1, std::max(1, strands - 1));
      b.letters.push_back(uniform(rng, 0, 1) ? g : -g);
    }
    std::vector<bool> seen(static_cast<std::size_t>(strands), false);
    for (int l : b.letters) seen[static_cast<std::size_t>(std::abs(l))] = true;
    bool all = true;
    for (int g = 1; g < strands; ++g) all = all && seen[static_cast<std::size_t>(g)];
    if (all) return b;
  }
}

BraidWord random_knot_braid(std::mt19937_64& rng, int strands, int length) {
  // The permutation must be a single cycle, which has the parity of strands - 1.
  length = std::max(length, strands - 1);
  if ((length - (strands - 1)) % 2 != 0) ++length;
  for (;;) {
    BraidWord b = random_braid(rng, strands, length);
    if (closure_components(b) == 1) return b;
  }
}

}  // namespace linkbound
