#include "supernil/param_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "supernil/catalog.hpp"
#include "supernil/errors.hpp"

namespace supernil {

PolyVector::PolyVector(unsigned n, unsigned m, std::vector<std::string> variables,
                       unsigned conductor)
    : even(n, Poly(variables, conductor)), odd(m, Poly(variables, conductor)) {}

bool PolyVector::is_zero() const {
  for (const auto& p : even) {
    if (!p.is_zero()) return false;
  }
  for (const auto& p : odd) {
    if (!p.is_zero()) return false;
  }
  return true;
}

namespace {

std::string pair_name(const std::pair<BasisIndex, BasisIndex>& key) {
  return "[" + key.first.name() + ", " + key.second.name() + "]";
}

}  // namespace

ParamAlgebra::ParamAlgebra(unsigned n, unsigned m, unsigned conductor,
                           std::vector<std::string> variables,
                           std::map<std::pair<BasisIndex, BasisIndex>, PolyVector> table)
    : n_(n), m_(m), conductor_(conductor), variables_(std::move(variables)) {
  if (n_ + m_ == 0) throw DomainError("parametric algebra needs a nonempty basis");
  if (conductor_ == 0) throw DomainError("parametric algebra conductor must be positive");
  for (auto& [key, value] : table) {
    auto in_range = [&](BasisIndex b) {
      unsigned limit = b.parity == Parity::Even ? n_ : m_;
      return b.index >= 1 && b.index <= limit;
    };
    if (!in_range(key.first) || !in_range(key.second)) {
      throw DomainError("bracket " + pair_name(key) + " indexes outside the basis");
    }
    if (value.even.size() != n_ || value.odd.size() != m_) {
      throw MismatchError("bracket " + pair_name(key) + " has a value of the wrong shape");
    }
    const Parity target = key.first.parity ^ key.second.parity;
    for (unsigned i = 0; i < n_ + m_; ++i) {
      const bool in_even = i < n_;
      const Poly& p = in_even ? value.even[i] : value.odd[i - n_];
      if (p.variables() != variables_ || p.conductor() != conductor_) {
        throw MismatchError("bracket " + pair_name(key) +
                            " mixes polynomial variable lists or conductors");
      }
      const Parity block = in_even ? Parity::Even : Parity::Odd;
      if (block != target && !p.is_zero()) {
        throw MismatchError("bracket " + pair_name(key) +
                            " has a component of the wrong parity");
      }
    }
    if (!value.is_zero()) table_.emplace(key, std::move(value));
  }
}

std::vector<BasisIndex> ParamAlgebra::basis_order() const {
  std::vector<BasisIndex> order;
  order.reserve(n_ + m_);
  for (unsigned i = 1; i <= n_; ++i) order.push_back({Parity::Even, i});
  for (unsigned j = 1; j <= m_; ++j) order.push_back({Parity::Odd, j});
  return order;
}

PolyVector ParamAlgebra::basis_bracket(BasisIndex a, BasisIndex b) const {
  auto it = table_.find({a, b});
  if (it != table_.end()) return it->second;
  return PolyVector(n_, m_, variables_, conductor_);
}

namespace {

void pv_accumulate(PolyVector& dst, const Poly& weight, const PolyVector& src, int sign) {
  if (weight.is_zero()) return;
  for (std::size_t i = 0; i < dst.even.size(); ++i) {
    if (src.even[i].is_zero()) continue;
    Poly term = weight * src.even[i];
    dst.even[i] = sign < 0 ? dst.even[i] - term : dst.even[i] + term;
  }
  for (std::size_t i = 0; i < dst.odd.size(); ++i) {
    if (src.odd[i].is_zero()) continue;
    Poly term = weight * src.odd[i];
    dst.odd[i] = sign < 0 ? dst.odd[i] - term : dst.odd[i] + term;
  }
}

/// [b, w] for a basis element b and polynomial vector w, extended bilinearly.
PolyVector bracket_basis_left(const ParamAlgebra& a, BasisIndex b, const PolyVector& w,
                              PolyVector acc, int sign) {
  for (unsigned i = 0; i < a.even_dim(); ++i) {
    pv_accumulate(acc, w.even[i], a.basis_bracket(b, {Parity::Even, i + 1}), sign);
  }
  for (unsigned j = 0; j < a.odd_dim(); ++j) {
    pv_accumulate(acc, w.odd[j], a.basis_bracket(b, {Parity::Odd, j + 1}), sign);
  }
  return acc;
}

/// [w, b] for a polynomial vector w and basis element b.
PolyVector bracket_basis_right(const ParamAlgebra& a, const PolyVector& w, BasisIndex b,
                               PolyVector acc, int sign) {
  for (unsigned i = 0; i < a.even_dim(); ++i) {
    pv_accumulate(acc, w.even[i], a.basis_bracket({Parity::Even, i + 1}, b), sign);
  }
  for (unsigned j = 0; j < a.odd_dim(); ++j) {
    pv_accumulate(acc, w.odd[j], a.basis_bracket({Parity::Odd, j + 1}, b), sign);
  }
  return acc;
}

}  // namespace

PolyVector identity_residual(const ParamAlgebra& a, BasisIndex x, BasisIndex y,
                             BasisIndex z) {
  const int sign = parity_sign(y.parity, z.parity);
  PolyVector residual(a.even_dim(), a.odd_dim(), a.variables(), a.conductor());
  residual = bracket_basis_left(a, x, a.basis_bracket(y, z), std::move(residual), +1);
  residual = bracket_basis_right(a, a.basis_bracket(x, y), z, std::move(residual), -1);
  residual = bracket_basis_right(a, a.basis_bracket(x, z), y, std::move(residual), sign);
  return residual;
}

std::vector<Constraint> emit_constraints(const ParamAlgebra& a) {
  const auto order = a.basis_order();
  std::vector<Constraint> out;
  for (BasisIndex x : order) {
    for (BasisIndex y : order) {
      for (BasisIndex z : order) {
        const PolyVector residual = identity_residual(a, x, y, z);
        for (BasisIndex coord : order) {
          const Poly& p = coord.parity == Parity::Even ? residual.even[coord.index - 1]
                                                       : residual.odd[coord.index - 1];
          if (p.is_zero()) continue;
          bool seen = false;
          for (const auto& c : out) {
            if (c.poly.proportional_to(p)) {
              seen = true;
              break;
            }
          }
          if (!seen) out.push_back({x, y, z, coord, p});
        }
      }
    }
  }
  return out;
}

SuperAlgebra specialize(const ParamAlgebra& a, const std::map<std::string, Scalar>& point) {
  std::vector<BracketEntry> entries;
  unsigned target = a.conductor();
  for (const auto& name : a.variables()) {
    auto it = point.find(name);
    if (it == point.end()) {
      throw DomainError("missing binding for polynomial variable '" + name + "'");
    }
    target = static_cast<unsigned>(std::lcm(target, it->second.minimal_conductor()));
  }
  for (const auto& [key, value] : a.table()) {
    GradedVector v(a.even_dim(), a.odd_dim(), target);
    for (unsigned i = 0; i < a.even_dim(); ++i) {
      v.even[i] = value.even[i].evaluate(point).embedded(target);
    }
    for (unsigned j = 0; j < a.odd_dim(); ++j) {
      v.odd[j] = value.odd[j].evaluate(point).embedded(target);
    }
    if (!v.is_zero()) entries.push_back({key.first, key.second, v});
  }
  return SuperAlgebra(a.even_dim(), a.odd_dim(), target, entries);
}

std::vector<std::string> family_variables(const std::string& name, unsigned n) {
  const auto& names = family_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw DomainError("unknown family '" + name + "'");
  }
  auto run = [&](const std::string& stem, unsigned top) {
    std::vector<std::string> vars;
    for (unsigned u = 4; u <= top; ++u) vars.push_back(stem + std::to_string(u));
    return vars;
  };
  std::vector<std::string> vars;
  if (name == "Leibn1") {
    vars = {"alpha"};
  } else if (name == "L") {
    vars = run("a", n);
    vars.push_back("theta");
  } else if (name == "G") {
    vars = run("b", n);
    vars.push_back("gamma");
  } else if (name == "M") {
    // a_n never occurs in the table and gamma4's only consistent value is 0.
    vars = run("a", n >= 4 ? n - 1 : 0);
    vars.push_back("theta");
    vars.push_back("tau");
  } else if (name == "H") {
    // gamma's only consistent value is 0.
    vars = run("b", n);
    vars.push_back("delta");
  }
  return vars;
}

ParamAlgebra make_param_family(const std::string& name, unsigned n, unsigned m) {
  const auto vars = family_variables(name, n);
  FamilySpec base_spec{name, n, m, {}};
  const SuperAlgebra base = make_family(base_spec, /*verify=*/false);
  const unsigned N = base.conductor();

  // Structure constants of every family are affine in the parameters, so the
  // polynomial table is the zero-parameter table plus one difference table
  // per variable, probed through the scalar constructor.
  std::set<std::pair<BasisIndex, BasisIndex>> keys;
  for (const auto& [key, value] : base.table()) keys.insert(key);
  std::vector<SuperAlgebra> probes;
  probes.reserve(vars.size());
  for (const auto& var : vars) {
    FamilySpec probe_spec{name, n, m, {{var, Scalar::one(1)}}};
    probes.push_back(make_family(probe_spec, /*verify=*/false));
    if (probes.back().conductor() != N) {
      throw MismatchError("parameter probe for '" + var + "' changed the conductor");
    }
    for (const auto& [key, value] : probes.back().table()) keys.insert(key);
  }

  std::map<std::pair<BasisIndex, BasisIndex>, PolyVector> table;
  for (const auto& key : keys) {
    const GradedVector base_value = base.basis_bracket(key.first, key.second);
    PolyVector value(base.even_dim(), base.odd_dim(), vars, N);
    auto fill = [&](unsigned count, bool even_block) {
      for (unsigned i = 0; i < count; ++i) {
        const Scalar& c = even_block ? base_value.even[i] : base_value.odd[i];
        Poly p = Poly::constant(vars, c);
        for (std::size_t v = 0; v < vars.size(); ++v) {
          const GradedVector pv = probes[v].basis_bracket(key.first, key.second);
          const Scalar d = (even_block ? pv.even[i] : pv.odd[i]) - c;
          if (d.is_zero()) continue;
          p = p + Poly::variable(vars, vars[v], N).scaled(d);
        }
        (even_block ? value.even[i] : value.odd[i]) = std::move(p);
      }
    };
    fill(base.even_dim(), true);
    fill(base.odd_dim(), false);
    table.emplace(key, std::move(value));
  }
  return ParamAlgebra(base.even_dim(), base.odd_dim(), N, vars, std::move(table));
}

}  // namespace supernil
