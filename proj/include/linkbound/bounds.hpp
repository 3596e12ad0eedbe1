#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkbound/factorization.hpp"
#include "linkbound/signature.hpp"

namespace linkbound {

/// Lower bound above some upper bound: the inputs contradict each other.
class InconsistentBounds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Band-move certificate or infection declaration that cannot hold.
class InvalidDeclaration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SliceVerdict { obstructed, consistent_with_slice, inconclusive };

std::string to_string(SliceVerdict v);
SliceVerdict parse_slice_verdict(const std::string& text);

/// Where a bound came from. `category` is "topological" or "smooth".
struct Provenance {
  std::string bound;  // "lower" or "upper"
  int value = 0;
  std::string source;
  std::string category;
  std::string detail;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BoundReport {
  std::string label;
  int components = 1;
  int lower = 0;
  std::optional<int> upper;
  SliceVerdict slice_verdict = SliceVerdict::inconclusive;
  std::vector<Provenance> provenance;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;

  bool exact() const { return upper && *upper == lower; }
  /// Throws InconsistentBounds when lower > upper.
  void check_consistent() const;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

struct LowerBound {
  int bound = 0;
  int max_abs_sigma = 0;
  int beta = 0;
  int components = 1;
  CirclePoint witness = CirclePoint::at(Rational(-2));  // sample inside the witness interval
  std::size_t witness_interval = 0;
  SignatureFunction function;
};

/// ceil((S + m - 1 - beta) / 2) with S the largest |sigma| over the interval
/// values of the signature function. Averaged values at breakpoints are
/// means of two interval values, so they never exceed S in absolute value.
LowerBound lt_lower_bound(const SeifertData& v);

/// ceil(width / 2); knots only.
int width_upper_bound(const Laurent& delta);

/// b band moves turning a link of m components into a u-component unlink.
struct BandCertificate {
  int bands = 0;
  int unlink_components = 1;
  friend bool operator==(const BandCertificate&, const BandCertificate&) = default;
};

/// Parses "b,u".
BandCertificate parse_band_certificate(const std::string& text);

/// Capping the unlink with u discs gives a surface with chi = u - b and m
/// boundary circles in at most m pieces, so total genus <= (b - u + m) / 2.
/// For a knot this is (1 - chi) / 2.
int band_certificate_genus(const BandCertificate& cert, int components = 1);

/// Genus of the surface behind V; knots only.
int seifert_genus_upper_bound(const SeifertData& v);

struct SliceResult {
  SliceVerdict verdict = SliceVerdict::inconclusive;
  FoxMilnorResult fox_milnor;
  bool signature_obstructs = false;
  std::string reason;
};

/// Fox-Milnor on the Alexander polynomial, with the signature bound as a
/// second, independent obstruction. Knots only.
SliceResult slice_obstruction(const SeifertData& v, int degree_cap = 12);

/// Infection of L along r axes by a string link J. Assumptions are recorded,
/// never verified.
struct InfectionDecl {
  int axes = 0;
  std::vector<std::vector<Integer>> linking_numbers;  // r x m, lk(axis k, component i)
  int double_points = 0;                              // c
  std::optional<int> milnor_vanishing_length;         // must be >= 2c
  std::string notes;

  /// Throws InvalidDeclaration when malformed or when the hypotheses are not
  /// declared. `components` is m of the base link.
  void validate(int components) const;
  bool axes_null_homologous() const;
  friend bool operator==(const InfectionDecl&, const InfectionDecl&) = default;
};

BoundReport infection_transfer(const BoundReport& base, const SeifertData& v_base, const InfectionDecl& decl);

BoundReport assemble_report(const SeifertData& v, const std::vector<BandCertificate>& certs, int degree_cap = 12);

}  // namespace linkbound
