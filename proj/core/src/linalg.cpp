#include "supernil/linalg.hpp"

#include <algorithm>

#include "supernil/errors.hpp"

namespace supernil {

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned conductor)
    : conductor_(conductor),
      rows_(rows),
      cols_(cols),
      a_(rows * cols, Scalar::zero(conductor)) {}

Matrix Matrix::identity(std::size_t n, unsigned conductor) {
  Matrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(conductor);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw MismatchError("matrix apply shape mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(conductor_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

std::size_t rref_in_place(std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Scalar inv = rows[pivot_row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) rows[pivot_row][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col].is_zero()) continue;
      Scalar factor = rows[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        rows[i][j] -= factor * rows[pivot_row][j];
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return pivot_row;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row;
    row.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rref_in_place(rows);
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row;
    row.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  rref_in_place(rows);

  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : rows) {
    std::size_t p = 0;
    while (p < cols && row[p].is_zero()) ++p;
    pivot_of_row.push_back(p);
    is_pivot[p] = true;
  }

  // One generator per free column: x_free = 1, pivot entries solved from the
  // echelon rows, remaining free entries 0.
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(m.conductor()));
    v[free] = Scalar::one(m.conductor());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      v[pivot_of_row[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  rref_in_place(basis);
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Scalar>> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> row;
    row.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(i == j ? Scalar::one(m.conductor()) : Scalar::zero(m.conductor()));
    }
    aug.push_back(std::move(row));
  }
  rref_in_place(aug);
  // Invertible iff the left block reduced to the identity; the appended
  // columns keep the stacked rank at n regardless.
  if (aug.size() != n) throw DomainError("matrix is singular");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar expect =
          i == j ? Scalar::one(m.conductor()) : Scalar::zero(m.conductor());
      if (aug[i][j] != expect) throw DomainError("matrix is singular");
    }
  }
  Matrix inv(n, n, m.conductor());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
  }
  return inv;
}

}  // namespace supernil
