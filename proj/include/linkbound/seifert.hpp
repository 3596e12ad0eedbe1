#pragma once

#include <stdexcept>
#include <string>

#include "linkbound/braid.hpp"
#include "linkbound/matrix.hpp"

namespace linkbound {

/// Raised when a matrix cannot be the Seifert matrix of a connected surface
/// with the declared number of boundary components.
class InvalidSeifertData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer Seifert matrix V of a connected genus-g surface with m boundary
/// components, n = 2g + m - 1. Construction checks that V - V^T has rank 2g
/// and that its nonzero elementary divisors are all 1 (so |det(V - V^T)| = 1
/// for knots).
class SeifertData {
 public:
  SeifertData() = default;
  SeifertData(IntMatrix v, int components, std::string label = {});

  /// Takes m from the rank of V - V^T.
  static SeifertData infer_components(IntMatrix v, std::string label = {});

  const IntMatrix& matrix() const { return v_; }
  int size() const { return static_cast<int>(v_.rows()); }
  int components() const { return components_; }
  int genus() const { return genus_; }
  const std::string& label() const { return label_; }

  friend bool operator==(const SeifertData& a, const SeifertData& b) {
    return a.v_ == b.v_ && a.components_ == b.components_ && a.label_ == b.label_;
  }

 private:
  IntMatrix v_ = IntMatrix(0, 0);
  int components_ = 1;
  int genus_ = 0;
  std::string label_;
};

/// Seifert's algorithm on the closed braid: one disc per strand, one band per
/// letter. H_1 is spanned by loops through consecutive bands of the same
/// generator, ordered by (generator index, occurrence).
SeifertData seifert_matrix_from_braid(const BraidWord& b, std::string label = {});

/// Block sum diag(V_a, V_b); knots only.
SeifertData connected_sum(const SeifertData& a, const SeifertData& b);

/// V -> -V^T.
SeifertData mirror(const SeifertData& a);

enum class StabilizeDirection { row_first, column_first };

/// Elementary S-equivalence enlargement by two rows and columns:
///   row_first:    [[V, w, 0], [0, 0, 1], [0, 0, 0]]
///   column_first: [[V, 0, 0], [w^T, 0, 0], [0, 1, 0]]
SeifertData stabilize(const SeifertData& a, StabilizeDirection direction, const IntVector& w);

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);

}  // namespace linkbound
