#include "supernil/subspace.hpp"

#include <string>

#include "supernil/errors.hpp"

namespace supernil {

Subspace::Subspace(unsigned n, unsigned m, unsigned conductor)
    : n_(n), m_(m), conductor_(conductor) {}

Subspace Subspace::span(unsigned n, unsigned m, unsigned conductor,
                        const std::vector<GradedVector>& vectors) {
  Subspace s(n, m, conductor);
  s.rows_.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.even.size() != n || v.odd.size() != m) {
      throw MismatchError("spanning vector does not match ambient dimensions");
    }
    s.rows_.push_back(v.concat());
  }
  rref_in_place(s.rows_);
  return s;
}

Subspace Subspace::whole(unsigned n, unsigned m, unsigned conductor) {
  Subspace s(n, m, conductor);
  const std::size_t dim = static_cast<std::size_t>(n) + m;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Scalar> row(dim, Scalar::zero(conductor));
    row[i] = Scalar::one(conductor);
    s.rows_.push_back(std::move(row));
  }
  return s;
}

std::vector<GradedVector> Subspace::basis() const {
  std::vector<GradedVector> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(GradedVector::split(row, n_, m_));
  return out;
}

bool Subspace::contains(const GradedVector& v) const {
  if (v.even.size() != n_ || v.odd.size() != m_) {
    throw MismatchError("vector does not match ambient dimensions");
  }
  if (v.is_zero()) return true;
  // Reduce against the echelon rows; membership iff the residue vanishes.
  std::vector<Scalar> r = v.concat();
  const std::size_t cols = r.size();
  for (const auto& row : rows_) {
    std::size_t p = 0;
    while (p < cols && row[p].is_zero()) ++p;
    if (p == cols || r[p].is_zero()) continue;
    Scalar factor = r[p];
    for (std::size_t j = p; j < cols; ++j) r[j] -= factor * row[j];
  }
  for (const auto& c : r) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other, "contains");
  for (const auto& row : other.rows_) {
    if (!contains(GradedVector::split(row, n_, m_))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other, "sum");
  Subspace s(n_, m_, conductor_);
  s.rows_ = rows_;
  s.rows_.insert(s.rows_.end(), other.rows_.begin(), other.rows_.end());
  rref_in_place(s.rows_);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other, "intersect");
  // Zassenhaus: echelonize [A|A] stacked on [B|0]; rows with zero left block
  // carry an intersection basis in the right block.
  const std::size_t cols = static_cast<std::size_t>(n_) + m_;
  std::vector<std::vector<Scalar>> block;
  block.reserve(rows_.size() + other.rows_.size());
  for (const auto& row : rows_) {
    std::vector<Scalar> wide = row;
    wide.insert(wide.end(), row.begin(), row.end());
    block.push_back(std::move(wide));
  }
  for (const auto& row : other.rows_) {
    std::vector<Scalar> wide = row;
    wide.resize(2 * cols, Scalar::zero(conductor_));
    block.push_back(std::move(wide));
  }
  rref_in_place(block);
  Subspace s(n_, m_, conductor_);
  for (const auto& wide : block) {
    bool left_zero = true;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!wide[j].is_zero()) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    s.rows_.emplace_back(wide.begin() + cols, wide.end());
  }
  rref_in_place(s.rows_);
  return s;
}

bool operator==(const Subspace& a, const Subspace& b) {
  a.check_compatible(b, "compare");
  return a.rows_ == b.rows_;
}

void Subspace::check_compatible(const Subspace& other, const char* op) const {
  if (n_ != other.n_ || m_ != other.m_ || conductor_ != other.conductor_) {
    throw MismatchError(std::string("subspace ") + op +
                        ": ambient spaces differ");
  }
}

}  // namespace supernil
