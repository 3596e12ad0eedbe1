#pragma once

#include <random>

#include "linkbound/braid.hpp"
#include "linkbound/seifert.hpp"

namespace linkbound {

/// Uniform integer in [lo, hi].
int uniform(std::mt19937_64& rng, int lo, int hi);

/// Seifert data with entries in [-max_entry, max_entry]. The size is uniform
/// in 1..max_size; entries are redrawn until the matrix is valid for some m.
SeifertData random_seifert(std::mt19937_64& rng, int max_size = 6, int max_entry = 3);

/// Knot Seifert data of size 2g <= max_size: V - V^T starts as the standard
/// symplectic form and is then moved by random unimodular congruences that
/// keep every entry in [-max_entry, max_entry].
SeifertData random_knot_seifert(std::mt19937_64& rng, int max_size = 6, int max_entry = 3);

/// Random word of the given length in which every generator occurs.
BraidWord random_braid(std::mt19937_64& rng, int strands, int length);

/// Braid whose closure is a knot: rejection on closure_components. The
/// length is raised to the nearest value of the parity a knot needs.
BraidWord random_knot_braid(std::mt19937_64& rng, int strands, int length);

}  // namespace linkbound
