#pragma once

#include <cstddef>
#include <vector>

#include "supernil/cyclotomic.hpp"

namespace supernil {

/// Dense matrix over a fixed cyclotomic field.
class Matrix {
 public:
  Matrix() : conductor_(1), rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, unsigned conductor);

  static Matrix identity(std::size_t n, unsigned conductor);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned conductor() const { return conductor_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // this * column

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  unsigned conductor_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Canonical reduced row echelon form: pivots 1, pivot columns cleared, zero
/// rows dropped, rows ordered by pivot column. Returns the rank.
std::size_t rref_in_place(std::vector<std::vector<Scalar>>& rows);

std::size_t rank(const Matrix& m);

/// Canonical basis of {v : M v = 0}, one row per kernel dimension implies
/// the result is itself in reduced echelon form.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// Throws DomainError when the matrix is not square or not invertible.
Matrix inverse(const Matrix& m);

}  // namespace supernil
