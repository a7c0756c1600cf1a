#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "supernil/poly.hpp"
#include "supernil/superalgebra.hpp"

namespace supernil {

/// Graded coordinate vector with polynomial entries.
struct PolyVector {
  std::vector<Poly> even, odd;

  PolyVector() = default;
  PolyVector(unsigned n, unsigned m, std::vector<std::string> variables,
             unsigned conductor);

  bool is_zero() const;
};

/// Algebra whose structure constants are polynomials in a shared list of
/// parameters. The table is sparse like SuperAlgebra's and obeys the same
/// grading; absent pairs multiply to zero for every parameter value.
class ParamAlgebra {
 public:
  ParamAlgebra(unsigned n, unsigned m, unsigned conductor,
               std::vector<std::string> variables,
               std::map<std::pair<BasisIndex, BasisIndex>, PolyVector> table);

  unsigned even_dim() const { return n_; }
  unsigned odd_dim() const { return m_; }
  unsigned dim() const { return n_ + m_; }
  unsigned conductor() const { return conductor_; }
  const std::vector<std::string>& variables() const { return variables_; }

  const std::map<std::pair<BasisIndex, BasisIndex>, PolyVector>& table() const {
    return table_;
  }

  std::vector<BasisIndex> basis_order() const;  // x1..xn then y1..ym

  /// Table lookup; a vector of zero polynomials when the pair is absent.
  PolyVector basis_bracket(BasisIndex a, BasisIndex b) const;

  Poly zero_poly() const { return Poly(variables_, conductor_); }

 private:
  unsigned n_, m_, conductor_;
  std::vector<std::string> variables_;
  std::map<std::pair<BasisIndex, BasisIndex>, PolyVector> table_;
};

/// One nonzero coordinate of the defining identity's residual at an ordered
/// basis triple. The polynomial vanishing is what the identity demands there.
struct Constraint {
  BasisIndex x, y, z;
  BasisIndex coordinate;
  Poly poly;
};

/// Residual [x,[y,z]] - [[x,y],z] + (-1)^(ab) [[x,z],y] of the defining
/// identity at one ordered triple, with a, b the parities of y and z.
PolyVector identity_residual(const ParamAlgebra& a, BasisIndex x, BasisIndex y,
                             BasisIndex z);

/// Residual polynomials of the defining identity over all ordered basis
/// triples and output coordinates, in triple order then coordinate order,
/// deduplicated up to nonzero scalar multiples (first witness kept). Empty
/// exactly when the identity holds for every parameter value.
std::vector<Constraint> emit_constraints(const ParamAlgebra& a);

/// Substitutes scalars for all parameters. Throws DomainError when the point
/// misses a variable. The result lives in the smallest field containing the
/// table and the bindings.
SuperAlgebra specialize(const ParamAlgebra& a,
                        const std::map<std::string, Scalar>& point);

/// Free parameters of a catalog family, in table order; empty for families
/// without parameters. Keys the constructors accept but never use, or whose
/// only consistent value is zero, are not variables.
std::vector<std::string> family_variables(const std::string& name, unsigned n);

/// Symbolic counterpart of make_family: the same table with the family's
/// free parameters as polynomial variables.
ParamAlgebra make_param_family(const std::string& name, unsigned n, unsigned m);

}  // namespace supernil
