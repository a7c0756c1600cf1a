#pragma once

#include <string>
#include <vector>

#include "supernil/cyclotomic.hpp"

namespace supernil {

enum class Parity { Even, Odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

/// Mod-2 sign (-1)^(ab): -1 exactly when both parities are odd.
inline int parity_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// 1-based index into the even (x1..xn) or odd (y1..ym) basis block.
struct BasisIndex {
  Parity parity;
  unsigned index;

  std::string name() const {
    return (parity == Parity::Even ? "x" : "y") + std::to_string(index);
  }

  friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
    return a.parity == b.parity && a.index == b.index;
  }
  friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
    if (a.parity != b.parity) return a.parity == Parity::Even;
    return a.index < b.index;
  }
};

/// Parses "x3"/"y1"; throws ParseError on anything else.
BasisIndex parse_basis_name(const std::string& name);

/// Element of a graded space with n even and m odd coordinates.
struct GradedVector {
  std::vector<Scalar> even;
  std::vector<Scalar> odd;

  GradedVector() = default;
  GradedVector(unsigned n, unsigned m, unsigned conductor)
      : even(n, Scalar::zero(conductor)), odd(m, Scalar::zero(conductor)) {}

  static GradedVector unit(unsigned n, unsigned m, unsigned conductor, BasisIndex at);

  bool is_zero() const;
  /// Zero outside a single parity block; the zero vector is both.
  bool is_homogeneous(Parity p) const;

  GradedVector& operator+=(const GradedVector& o);
  GradedVector& operator-=(const GradedVector& o);
  GradedVector& scale(const Scalar& c);

  friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
  friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
  friend bool operator==(const GradedVector& a, const GradedVector& b) {
    return a.even == b.even && a.odd == b.odd;
  }

  /// Coordinates as one row, even block first.
  std::vector<Scalar> concat() const;
  static GradedVector split(const std::vector<Scalar>& row, unsigned n, unsigned m);

  std::string str() const;  // e.g. "x1 + (1/2)*y2", "0"
};

}  // namespace supernil
