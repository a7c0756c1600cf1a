#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "supernil/rational.hpp"

namespace supernil {

/// Element of the cyclotomic field Q(zeta_N) for a fixed conductor N.
///
/// Stored as the reduced remainder modulo the N-th cyclotomic polynomial: a
/// coefficient vector of length phi(N) over the power basis 1, z, ..., z^(phi(N)-1)
/// where z = zeta_N. The representation is canonical, so two elements are equal
/// iff their conductors and coefficient vectors agree. Arithmetic requires both
/// operands to carry the same conductor; callers embed into a common conductor
/// first.
class Scalar {
 public:
  /// Zero of Q(zeta_N).
  explicit Scalar(unsigned conductor = 1);

  static Scalar zero(unsigned conductor) { return Scalar(conductor); }
  static Scalar one(unsigned conductor);
  static Scalar from_rational(const Rational& r, unsigned conductor);
  static Scalar integer(long v, unsigned conductor) {
    return from_rational(Rational(v), conductor);
  }

  /// zeta_N^((m*N)/t) = e^(2*pi*i*m/t); requires t | N and 0 <= m < t.
  static Scalar root_of_unity(long m, unsigned t, unsigned conductor);

  /// Parses the literal grammar: sums of terms, each an optionally
  /// parenthesised rational, "z", or "z^k", joined by '+'/'-' with optional '*'
  /// products, e.g. "3/2", "-1", "z^3", "(1/2)*z^2 + 1".
  static Scalar parse(const std::string& text, unsigned conductor);

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational; requires is_rational().
  Rational rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws DomainError on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;  // throws DomainError on zero

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order for deterministic containers and canonical output; carries no
  /// arithmetic meaning.
  static int compare(const Scalar& a, const Scalar& b);

  /// Image under Q(zeta_N) -> Q(zeta_N'), z -> z'^(N'/N); requires N | N'.
  Scalar embedded(unsigned conductor) const;

  /// Preimage under the embedding of Q(zeta_d) for d | N, when the element lies
  /// in that subfield. Returns false and leaves `out` untouched otherwise.
  bool project(unsigned conductor, Scalar& out) const;

  /// Smallest divisor d of the conductor with the element in Q(zeta_d).
  unsigned minimal_conductor() const;

  /// Canonical literal; parse(str(), conductor()) round-trips.
  std::string str() const;

 private:
  unsigned conductor_;
  std::vector<Rational> c_;  // length phi(conductor_)
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Euler phi. Exposed because callers sizing coefficient vectors need it.
unsigned euler_phi(unsigned n);

/// Ascending coefficients of the n-th cyclotomic polynomial (monic, integral).
std::vector<Rational> cyclotomic_polynomial(unsigned n);

}  // namespace supernil
