#pragma once

#include <cstddef>
#include <vector>

#include "supernil/graded.hpp"
#include "supernil/linalg.hpp"

namespace supernil {

/// Subspace of a graded coordinate space, held as the canonical reduced row
/// echelon basis over the concatenated coordinates (even block before odd).
/// Equal subspaces therefore have equal representations.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(unsigned n, unsigned m, unsigned conductor);

  static Subspace span(unsigned n, unsigned m, unsigned conductor,
                       const std::vector<GradedVector>& vectors);
  static Subspace whole(unsigned n, unsigned m, unsigned conductor);

  unsigned ambient_even() const { return n_; }
  unsigned ambient_odd() const { return m_; }
  unsigned conductor() const { return conductor_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  std::vector<GradedVector> basis() const;

  bool contains(const GradedVector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_compatible(const Subspace& other, const char* op) const;

  unsigned n_, m_, conductor_;
  std::vector<std::vector<Scalar>> rows_;
};

}  // namespace supernil
