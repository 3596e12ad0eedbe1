#include "linkbound/seifert.hpp"

#include <cstdlib>

namespace linkbound {
namespace {

IntMatrix skew_part(const IntMatrix& v) { return v - transpose(v); }

int rank_over_q(const IntMatrix& m) { return fraction_free_rank<Integer>(m); }

struct Loop {
  int generator;  // 1-based
  int first;      // letter positions of the two bands
  int second;
  int first_sign;
  int second_sign;
};

}  // namespace

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  auto n = static_cast<Eigen::Index>(rows.size());
  auto c = n == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(n, c);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    if (static_cast<Eigen::Index>(r.size()) != c) throw std::invalid_argument("int_matrix: ragged rows");
    Eigen::Index j = 0;
    for (long v : r) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

SeifertData::SeifertData(IntMatrix v, int components, std::string label)
    : v_(std::move(v)), components_(components), label_(std::move(label)) {
  if (v_.rows() != v_.cols()) throw InvalidSeifertData("Seifert matrix must be square");
  if (components_ < 1) throw InvalidSeifertData("a link has at least one component");
  const int n = size();
  const int twice_genus = n - components_ + 1;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw InvalidSeifertData("size " + std::to_string(n) + " is not 2g + m - 1 for m = " +
                             std::to_string(components_));
  }
  genus_ = twice_genus / 2;
  IntMatrix skew = skew_part(v_);
  int r = rank_over_q(skew);
  if (r != twice_genus) {
    throw InvalidSeifertData("rank of V - V^T is " + std::to_string(r) + ", expected 2g = " +
                             std::to_string(twice_genus));
  }
  for (const auto& d : elementary_divisors(skew)) {
    if (d != 1) {
      throw InvalidSeifertData("V - V^T has elementary divisor " + to_string(d) +
                               "; not the intersection form of a surface");
    }
  }
}

SeifertData SeifertData::infer_components(IntMatrix v, std::string label) {
  if (v.rows() != v.cols()) throw InvalidSeifertData("Seifert matrix must be square");
  int r = rank_over_q(skew_part(v));
  int m = static_cast<int>(v.rows()) - r + 1;
  return SeifertData(std::move(v), m, std::move(label));
}

SeifertData seifert_matrix_from_braid(const BraidWord& b, std::string label) {
  b.validate();
  std::vector<Loop> loops;
  std::vector<std::size_t> first_loop_of(static_cast<std::size_t>(b.strands) + 1, 0);
  for (int g = 1; g < b.strands; ++g) {
    first_loop_of[static_cast<std::size_t>(g)] = loops.size();
    int prev = -1;
    for (int p = 0; p < static_cast<int>(b.letters.size()); ++p) {
      if (std::abs(b.letters[static_cast<std::size_t>(p)]) != g) continue;
      if (prev >= 0) {
        loops.push_back({g, prev, p, b.letters[static_cast<std::size_t>(prev)] > 0 ? 1 : -1,
                         b.letters[static_cast<std::size_t>(p)] > 0 ? 1 : -1});
      }
      prev = p;
    }
    if (prev < 0) {
      throw InvalidSeifertData("disconnected surface: generator " + std::to_string(g) +
                               " never occurs, so the closure is split");
    }
  }
  first_loop_of[static_cast<std::size_t>(b.strands)] = loops.size();

  const auto n = static_cast<Eigen::Index>(loops.size());
  IntMatrix v = filled<Integer>(n, n, Integer(0));
  for (Eigen::Index a = 0; a < n; ++a) {
    const Loop& la = loops[static_cast<std::size_t>(a)];
    // Half-twisted bands at both ends: -1 for two positive bands, +1 for two
    // negative ones, 0 when mixed.
    if (la.first_sign == la.second_sign) v(a, a) = Integer(-la.first_sign);
    for (Eigen::Index c = 0; c < n; ++c) {
      const Loop& lc = loops[static_cast<std::size_t>(c)];
      if (lc.generator == la.generator && lc.first == la.second) {
        // Consecutive loops sharing the band at la.second.
        if (la.second_sign > 0) {
          v(c, a) = Integer(1);
        } else {
          v(a, c) = Integer(-1);
        }
      } else if (lc.generator == la.generator + 1) {
        // Loops on adjacent generators meet on the shared disc when their
        // band positions interleave.
        if (lc.first < la.first && la.first < lc.second && lc.second < la.second) {
          v(c, a) = Integer(1);
        } else if (la.first < lc.first && lc.first < la.second && la.second < lc.second) {
          v(c, a) = Integer(-1);
        }
      }
    }
  }
  return SeifertData(std::move(v), closure_components(b), std::move(label));
}

SeifertData connected_sum(const SeifertData& a, const SeifertData& b) {
  if (a.components() != 1 || b.components() != 1) {
    throw InvalidSeifertData("connected sum defined here for knots only");
  }
  const Eigen::Index na = a.size();
  const Eigen::Index nb = b.size();
  IntMatrix v = filled<Integer>(na + nb, na + nb, Integer(0));
  v.topLeftCorner(na, na) = a.matrix();
  v.bottomRightCorner(nb, nb) = b.matrix();
  std::string label;
  if (!a.label().empty() || !b.label().empty()) label = a.label() + "#" + b.label();
  return SeifertData(std::move(v), 1, std::move(label));
}

SeifertData mirror(const SeifertData& a) {
  IntMatrix v = -transpose(a.matrix());
  std::string label = a.label().empty() ? std::string() : "mirror(" + a.label() + ")";
  return SeifertData(std::move(v), a.components(), std::move(label));
}

SeifertData stabilize(const SeifertData& a, StabilizeDirection direction, const IntVector& w) {
  const Eigen::Index n = a.size();
  if (w.size() != n) {
    throw std::invalid_argument("stabilize: vector has length " + std::to_string(w.size()) +
                                ", expected " + std::to_string(n));
  }
  IntMatrix v = filled<Integer>(n + 2, n + 2, Integer(0));
  v.topLeftCorner(n, n) = a.matrix();
  if (direction == StabilizeDirection::row_first) {
    for (Eigen::Index i = 0; i < n; ++i) v(i, n) = w(i);
    v(n, n + 1) = Integer(1);
  } else {
    for (Eigen::Index j = 0; j < n; ++j) v(n, j) = w(j);
    v(n + 1, n) = Integer(1);
  }
  return SeifertData(std::move(v), a.components(), a.label());
}

}  // namespace linkbound
