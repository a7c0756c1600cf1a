#pragma once

#include <map>
#include <utility>
#include <vector>

#include "supernil/graded.hpp"
#include "supernil/linalg.hpp"
#include "supernil/subspace.hpp"

namespace supernil {

struct BracketEntry {
  BasisIndex left, right;
  GradedVector value;
};

/// Nonzero residual of the defining identity at one ordered basis triple.
struct IdentityViolation {
  BasisIndex x, y, z;
  GradedVector residual;
};

/// Finite-dimensional Z2-graded algebra with a right-multiplication table over
/// a fixed cyclotomic field. The table is sparse: absent basis products are
/// zero. Construction enforces the grading [L_a, L_b] <= L_(a+b) and rejects
/// entries whose value has a component of the wrong parity, naming the entry.
class SuperAlgebra {
 public:
  SuperAlgebra(unsigned n, unsigned m, unsigned conductor,
               const std::vector<BracketEntry>& entries);

  unsigned even_dim() const { return n_; }
  unsigned odd_dim() const { return m_; }
  unsigned dim() const { return n_ + m_; }
  unsigned conductor() const { return conductor_; }

  const std::map<std::pair<BasisIndex, BasisIndex>, GradedVector>& table() const {
    return table_;
  }

  GradedVector basis_vector(BasisIndex b) const;
  std::vector<BasisIndex> basis_order() const;  // x1..xn then y1..ym

  /// Table lookup; zero vector when the pair is absent.
  GradedVector basis_bracket(BasisIndex a, BasisIndex b) const;
  /// Bilinear extension.
  GradedVector bracket(const GradedVector& u, const GradedVector& v) const;

  /// Residuals [x,[y,z]] - [[x,y],z] + (-1)^(ab) [[x,z],y] over all ordered
  /// basis triples, with a, b the parities of y and z. Empty means the
  /// defining identity holds.
  std::vector<IdentityViolation> check_superidentity() const;

  /// Graded antisymmetry [u,v] = -(-1)^(|u||v|) [v,u] on all basis pairs.
  bool is_lie() const;

  /// {z : [u, z] = 0 for all u}, computed as the kernel of the stacked
  /// right-multiplication maps.
  Subspace right_annihilator() const;

  /// Rewrites the table in the basis whose vectors are the columns of peven
  /// and podd (expressed in the current basis). Throws on singular input.
  SuperAlgebra change_basis(const Matrix& peven, const Matrix& podd) const;

  /// The even block as a standalone algebra with m = 0.
  SuperAlgebra even_part() const;

  Subspace whole_space() const;
  Subspace even_space() const;
  Subspace odd_space() const;

  /// Matrix of v -> [v, x] restricted to the block of the given parity;
  /// x must be even so that the operator preserves parity.
  Matrix right_multiplication_on(Parity block, const GradedVector& x) const;

 private:
  void validate_entry(const BracketEntry& e) const;

  unsigned n_, m_, conductor_;
  std::map<std::pair<BasisIndex, BasisIndex>, GradedVector> table_;
};

/// span{[u, v] : u basis of U, v basis of V}; sufficient by bilinearity.
Subspace product_span(const SuperAlgebra& a, const Subspace& u, const Subspace& v);

}  // namespace supernil
