#include "supernil/superalgebra.hpp"

#include <string>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

std::string pair_name(BasisIndex a, BasisIndex b) {
  return "[" + a.name() + ", " + b.name() + "]";
}

}  // namespace

SuperAlgebra::SuperAlgebra(unsigned n, unsigned m, unsigned conductor,
                           const std::vector<BracketEntry>& entries)
    : n_(n), m_(m), conductor_(conductor) {
  for (const auto& e : entries) {
    validate_entry(e);
    if (e.value.is_zero()) continue;
    auto key = std::make_pair(e.left, e.right);
    if (table_.count(key)) {
      throw DomainError("duplicate bracket entry " + pair_name(e.left, e.right));
    }
    table_.emplace(std::move(key), e.value);
  }
}

void SuperAlgebra::validate_entry(const BracketEntry& e) const {
  auto check_index = [this](BasisIndex b) {
    unsigned bound = b.parity == Parity::Even ? n_ : m_;
    if (b.index < 1 || b.index > bound) {
      throw DomainError("basis index out of range: " + b.name());
    }
  };
  check_index(e.left);
  check_index(e.right);
  if (e.value.even.size() != n_ || e.value.odd.size() != m_) {
    throw DomainError("bracket value of " + pair_name(e.left, e.right) +
                      " does not match the algebra dimensions");
  }
  for (const auto& c : e.value.even) {
    if (c.conductor() != conductor_) {
      throw MismatchError("bracket value of " + pair_name(e.left, e.right) +
                          " uses a different conductor");
    }
  }
  for (const auto& c : e.value.odd) {
    if (c.conductor() != conductor_) {
      throw MismatchError("bracket value of " + pair_name(e.left, e.right) +
                          " uses a different conductor");
    }
  }
  if (!e.value.is_homogeneous(e.left.parity ^ e.right.parity)) {
    throw DomainError("bracket value of " + pair_name(e.left, e.right) +
                      " has components of the wrong parity");
  }
}

GradedVector SuperAlgebra::basis_vector(BasisIndex b) const {
  return GradedVector::unit(n_, m_, conductor_, b);
}

std::vector<BasisIndex> SuperAlgebra::basis_order() const {
  std::vector<BasisIndex> order;
  order.reserve(dim());
  for (unsigned i = 1; i <= n_; ++i) order.push_back({Parity::Even, i});
  for (unsigned j = 1; j <= m_; ++j) order.push_back({Parity::Odd, j});
  return order;
}

GradedVector SuperAlgebra::basis_bracket(BasisIndex a, BasisIndex b) const {
  auto it = table_.find({a, b});
  if (it != table_.end()) return it->second;
  return GradedVector(n_, m_, conductor_);
}

GradedVector SuperAlgebra::bracket(const GradedVector& u, const GradedVector& v) const {
  if (u.even.size() != n_ || u.odd.size() != m_ || v.even.size() != n_ ||
      v.odd.size() != m_) {
    throw MismatchError("bracket argument does not match the algebra dimensions");
  }
  GradedVector out(n_, m_, conductor_);
  auto accumulate = [&](BasisIndex a, const Scalar& ca) {
    for (unsigned i = 1; i <= n_; ++i) {
      const Scalar& cb = v.even[i - 1];
      if (cb.is_zero()) continue;
      GradedVector w = basis_bracket(a, {Parity::Even, i});
      if (w.is_zero()) continue;
      out += w.scale(ca * cb);
    }
    for (unsigned j = 1; j <= m_; ++j) {
      const Scalar& cb = v.odd[j - 1];
      if (cb.is_zero()) continue;
      GradedVector w = basis_bracket(a, {Parity::Odd, j});
      if (w.is_zero()) continue;
      out += w.scale(ca * cb);
    }
  };
  for (unsigned i = 1; i <= n_; ++i) {
    if (!u.even[i - 1].is_zero()) accumulate({Parity::Even, i}, u.even[i - 1]);
  }
  for (unsigned j = 1; j <= m_; ++j) {
    if (!u.odd[j - 1].is_zero()) accumulate({Parity::Odd, j}, u.odd[j - 1]);
  }
  return out;
}

std::vector<IdentityViolation> SuperAlgebra::check_superidentity() const {
  std::vector<IdentityViolation> violations;
  const auto order = basis_order();
  // [b, w] for a basis element b and an arbitrary w, skipping zero coords.
  auto left_mul = [this](BasisIndex b, const GradedVector& w) {
    GradedVector out(n_, m_, conductor_);
    for (unsigned i = 1; i <= n_; ++i) {
      if (w.even[i - 1].is_zero()) continue;
      GradedVector t = basis_bracket(b, {Parity::Even, i});
      if (!t.is_zero()) out += t.scale(w.even[i - 1]);
    }
    for (unsigned j = 1; j <= m_; ++j) {
      if (w.odd[j - 1].is_zero()) continue;
      GradedVector t = basis_bracket(b, {Parity::Odd, j});
      if (!t.is_zero()) out += t.scale(w.odd[j - 1]);
    }
    return out;
  };
  auto right_mul = [this](const GradedVector& w, BasisIndex b) {
    GradedVector out(n_, m_, conductor_);
    for (unsigned i = 1; i <= n_; ++i) {
      if (w.even[i - 1].is_zero()) continue;
      GradedVector t = basis_bracket({Parity::Even, i}, b);
      if (!t.is_zero()) out += t.scale(w.even[i - 1]);
    }
    for (unsigned j = 1; j <= m_; ++j) {
      if (w.odd[j - 1].is_zero()) continue;
      GradedVector t = basis_bracket({Parity::Odd, j}, b);
      if (!t.is_zero()) out += t.scale(w.odd[j - 1]);
    }
    return out;
  };
  for (BasisIndex x : order) {
    for (BasisIndex y : order) {
      GradedVector xy = basis_bracket(x, y);
      for (BasisIndex z : order) {
        GradedVector residual = left_mul(x, basis_bracket(y, z));
        residual -= right_mul(xy, z);
        GradedVector tail = right_mul(basis_bracket(x, z), y);
        if (parity_sign(y.parity, z.parity) < 0) {
          residual -= tail;
        } else {
          residual += tail;
        }
        if (!residual.is_zero()) {
          violations.push_back({x, y, z, std::move(residual)});
        }
      }
    }
  }
  return violations;
}

bool SuperAlgebra::is_lie() const {
  for (BasisIndex a : basis_order()) {
    for (BasisIndex b : basis_order()) {
      GradedVector lhs = basis_bracket(a, b);
      GradedVector rhs = basis_bracket(b, a);
      if (parity_sign(a.parity, b.parity) < 0) {
        if (!(lhs == rhs)) return false;
      } else {
        if (!(lhs + rhs).is_zero()) return false;
      }
    }
  }
  return true;
}

Subspace SuperAlgebra::right_annihilator() const {
  const auto order = basis_order();
  const std::size_t d = dim();
  // Row block per basis element u: the matrix of z -> [u, z].
  Matrix stacked(d * d, d, conductor_);
  for (std::size_t ui = 0; ui < d; ++ui) {
    for (std::size_t zi = 0; zi < d; ++zi) {
      std::vector<Scalar> col = basis_bracket(order[ui], order[zi]).concat();
      for (std::size_t r = 0; r < d; ++r) stacked.at(ui * d + r, zi) = col[r];
    }
  }
  std::vector<GradedVector> gens;
  for (const auto& row : kernel_basis(stacked)) {
    gens.push_back(GradedVector::split(row, n_, m_));
  }
  return Subspace::span(n_, m_, conductor_, gens);
}

SuperAlgebra SuperAlgebra::change_basis(const Matrix& peven, const Matrix& podd) const {
  if (peven.rows() != n_ || peven.cols() != n_ || podd.rows() != m_ ||
      podd.cols() != m_) {
    throw MismatchError("basis change matrices do not match the algebra dimensions");
  }
  Matrix even_inv = inverse(peven);
  Matrix odd_inv = m_ > 0 ? inverse(podd) : Matrix(0, 0, conductor_);

  auto new_basis_vector = [&](BasisIndex b) {
    GradedVector v(n_, m_, conductor_);
    if (b.parity == Parity::Even) {
      for (unsigned k = 1; k <= n_; ++k) v.even[k - 1] = peven.at(k - 1, b.index - 1);
    } else {
      for (unsigned k = 1; k <= m_; ++k) v.odd[k - 1] = podd.at(k - 1, b.index - 1);
    }
    return v;
  };
  auto to_new_coords = [&](const GradedVector& w) {
    GradedVector v(n_, m_, conductor_);
    v.even = even_inv.apply(w.even);
    if (m_ > 0) v.odd = odd_inv.apply(w.odd);
    return v;
  };

  std::vector<BracketEntry> entries;
  const auto order = basis_order();
  for (BasisIndex a : order) {
    for (BasisIndex b : order) {
      GradedVector w = bracket(new_basis_vector(a), new_basis_vector(b));
      if (w.is_zero()) continue;
      entries.push_back({a, b, to_new_coords(w)});
    }
  }
  return SuperAlgebra(n_, m_, conductor_, entries);
}

SuperAlgebra SuperAlgebra::even_part() const {
  std::vector<BracketEntry> entries;
  for (const auto& [key, value] : table_) {
    if (key.first.parity != Parity::Even || key.second.parity != Parity::Even) continue;
    GradedVector v(n_, 0, conductor_);
    v.even = value.even;
    entries.push_back({key.first, key.second, std::move(v)});
  }
  return SuperAlgebra(n_, 0, conductor_, entries);
}

Subspace SuperAlgebra::whole_space() const {
  return Subspace::whole(n_, m_, conductor_);
}

Subspace SuperAlgebra::even_space() const {
  std::vector<GradedVector> gens;
  for (unsigned i = 1; i <= n_; ++i) {
    gens.push_back(basis_vector({Parity::Even, i}));
  }
  return Subspace::span(n_, m_, conductor_, gens);
}

Subspace SuperAlgebra::odd_space() const {
  std::vector<GradedVector> gens;
  for (unsigned j = 1; j <= m_; ++j) {
    gens.push_back(basis_vector({Parity::Odd, j}));
  }
  return Subspace::span(n_, m_, conductor_, gens);
}

Matrix SuperAlgebra::right_multiplication_on(Parity block, const GradedVector& x) const {
  if (x.even.size() != n_ || x.odd.size() != m_) {
    throw MismatchError("operator argument does not match the algebra dimensions");
  }
  if (!x.is_homogeneous(Parity::Even)) {
    throw DomainError("right multiplication operator requires an even argument");
  }
  const unsigned d = block == Parity::Even ? n_ : m_;
  Matrix mat(d, d, conductor_);
  for (unsigned j = 1; j <= d; ++j) {
    GradedVector col = bracket(basis_vector({block, j}), x);
    const auto& coords = block == Parity::Even ? col.even : col.odd;
    for (unsigned i = 1; i <= d; ++i) mat.at(i - 1, j - 1) = coords[i - 1];
  }
  return mat;
}

Subspace product_span(const SuperAlgebra& a, const Subspace& u, const Subspace& v) {
  std::vector<GradedVector> gens;
  for (const auto& ub : u.basis()) {
    for (const auto& vb : v.basis()) {
      GradedVector w = a.bracket(ub, vb);
      if (!w.is_zero()) gens.push_back(std::move(w));
    }
  }
  return Subspace::span(a.even_dim(), a.odd_dim(), a.conductor(), gens);
}

}  // namespace supernil
