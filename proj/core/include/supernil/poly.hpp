#pragma once

#include <map>
#include <string>
#include <vector>

#include "supernil/cyclotomic.hpp"

namespace supernil {

/// Multivariate polynomial over a fixed ordered variable list, with
/// coefficients in a fixed cyclotomic field. Terms are kept graded
/// lexicographically with the leading term first and no zero coefficients.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  /// Total degree first, then lexicographic; orders leading terms first.
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Scalar, TermOrder>;

  /// The zero polynomial.
  Poly(std::vector<std::string> variables, unsigned conductor);

  static Poly constant(std::vector<std::string> variables, const Scalar& value);
  static Poly variable(std::vector<std::string> variables, const std::string& name,
                       unsigned conductor);

  const std::vector<std::string>& variables() const { return variables_; }
  unsigned conductor() const { return conductor_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree() const;  // 0 for the zero polynomial

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  /// True when other = c * this for some nonzero scalar c (zero matches
  /// only zero).
  bool proportional_to(const Poly& other) const;

  /// Substitutes a scalar for every variable. The point must bind each
  /// variable; unrelated bindings are ignored. The result lives in the
  /// smallest field containing the coefficients and the used bindings.
  Scalar evaluate(const std::map<std::string, Scalar>& point) const;

  std::string str() const;

 private:
  void insert_term(const Exponents& exps, const Scalar& coeff);
  void check_compatible(const Poly& other) const;

  std::vector<std::string> variables_;
  unsigned conductor_;
  TermMap terms_;
};

}  // namespace supernil
