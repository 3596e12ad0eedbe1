#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkbound/laurent.hpp"
#include "linkbound/polynomial.hpp"

namespace linkbound {

/// p = unit * prod factors[i].first ^ factors[i].second, each factor
/// irreducible over Z, primitive and with positive leading coefficient.
struct Factorization {
  Integer unit{1};  // signed content
  std::vector<std::pair<PolyZ, int>> factors;

  PolyZ expand() const;
};

/// Complete factorization over Z by Kronecker's interpolation method,
/// applied to each square-free part. Exponential in the degree; intended for
/// the small degrees met in knot tables.
Factorization factor(const PolyZ& p);

/// A factor of exact degree `degree`, if one exists, found by Kronecker
/// interpolation. `p` must be primitive with p(0) != 0.
std::optional<PolyZ> kronecker_factor_of_degree(const PolyZ& p, int degree);

enum class FoxMilnorVerdict { passes, fails, inconclusive };

struct FoxMilnorResult {
  FoxMilnorVerdict verdict = FoxMilnorVerdict::inconclusive;
  /// f with p = +-t^k f(t) f(t^-1), normalized; set when the test passes.
  std::optional<Laurent> witness;
  std::string reason;
};

std::string to_string(FoxMilnorVerdict v);

/// Decides whether p factors as +-t^k f(t) f(t^-1) over Z[t, t^-1].
/// Cheap necessary conditions run first; the full factorization is attempted
/// only when the normalized degree is at most `degree_cap`.
FoxMilnorResult fox_milnor_test(const Laurent& p, int degree_cap = 12);

}  // namespace linkbound
