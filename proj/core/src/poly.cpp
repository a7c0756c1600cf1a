#include "supernil/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

unsigned total_degree(const Poly::Exponents& e) {
  unsigned d = 0;
  for (unsigned k : e) d += k;
  return d;
}

bool plain_integer(const std::string& s) {
  std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

bool Poly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly::Poly(std::vector<std::string> variables, unsigned conductor)
    : variables_(std::move(variables)), conductor_(conductor) {
  if (conductor_ == 0) throw DomainError("polynomial conductor must be positive");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    for (std::size_t j = i + 1; j < variables_.size(); ++j) {
      if (variables_[i] == variables_[j]) {
        throw DomainError("duplicate polynomial variable '" + variables_[i] + "'");
      }
    }
  }
}

Poly Poly::constant(std::vector<std::string> variables, const Scalar& value) {
  Poly p(std::move(variables), value.conductor());
  p.insert_term(Exponents(p.variables_.size(), 0), value);
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, const std::string& name,
                    unsigned conductor) {
  Poly p(std::move(variables), conductor);
  auto it = std::find(p.variables_.begin(), p.variables_.end(), name);
  if (it == p.variables_.end()) {
    throw DomainError("unknown polynomial variable '" + name + "'");
  }
  Exponents exps(p.variables_.size(), 0);
  exps[static_cast<std::size_t>(it - p.variables_.begin())] = 1;
  p.insert_term(exps, Scalar::one(conductor));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

unsigned Poly::degree() const {
  // Leading term first, so the first key carries the total degree.
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

void Poly::insert_term(const Exponents& exps, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exps, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& other) const {
  if (variables_ != other.variables_) {
    throw MismatchError("polynomial variable lists differ");
  }
  if (conductor_ != other.conductor_) {
    throw MismatchError("polynomial conductor mismatch: " + std::to_string(conductor_) +
                        " vs " + std::to_string(other.conductor_));
  }
}

Poly Poly::operator+(const Poly& other) const {
  check_compatible(other);
  Poly out(*this);
  for (const auto& [exps, coeff] : other.terms_) out.insert_term(exps, coeff);
  return out;
}

Poly Poly::operator-(const Poly& other) const {
  check_compatible(other);
  Poly out(*this);
  for (const auto& [exps, coeff] : other.terms_) out.insert_term(exps, -coeff);
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  check_compatible(other);
  Poly out(variables_, conductor_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponents exps(ea.size());
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
      out.insert_term(exps, ca * cb);
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(variables_, conductor_);
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, -coeff);
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.conductor() != conductor_) {
    throw MismatchError("scaling coefficient conductor mismatch");
  }
  Poly out(variables_, conductor_);
  if (c.is_zero()) return out;
  for (const auto& [exps, coeff] : terms_) out.insert_term(exps, coeff * c);
  return out;
}

bool Poly::operator==(const Poly& other) const {
  check_compatible(other);
  return terms_ == other.terms_;
}

bool Poly::proportional_to(const Poly& other) const {
  check_compatible(other);
  if (terms_.empty() || other.terms_.empty()) {
    return terms_.empty() && other.terms_.empty();
  }
  if (terms_.size() != other.terms_.size()) return false;
  Scalar ratio = other.terms_.begin()->second / terms_.begin()->second;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second * ratio != jt->second) return false;
  }
  return true;
}

Scalar Poly::evaluate(const std::map<std::string, Scalar>& point) const {
  std::vector<Scalar> values;
  values.reserve(variables_.size());
  unsigned target = conductor_;
  for (const auto& name : variables_) {
    auto it = point.find(name);
    if (it == point.end()) {
      throw DomainError("missing binding for polynomial variable '" + name + "'");
    }
    values.push_back(it->second);
    target = static_cast<unsigned>(std::lcm(target, it->second.minimal_conductor()));
  }
  for (auto& v : values) v = v.embedded(target);
  Scalar result = Scalar::zero(target);
  for (const auto& [exps, coeff] : terms_) {
    Scalar term = coeff.embedded(target);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      for (unsigned k = 0; k < exps[i]; ++k) term *= values[i];
    }
    result += term;
  }
  return result;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables_[i];
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    Scalar c = coeff;
    std::string sep = first ? "" : " + ";
    if (!first && c.is_rational() && c.rational_value().sign() < 0) {
      sep = " - ";
      c = -c;
    }
    std::string cs = c.str();
    if (mono.empty()) {
      out << sep << (plain_integer(cs) ? cs : "(" + cs + ")");
    } else if (cs == "1") {
      out << sep << mono;
    } else if (cs == "-1") {
      out << sep << "-" << mono;
    } else if (plain_integer(cs)) {
      out << sep << cs << "*" << mono;
    } else {
      out << sep << "(" << cs << ")*" << mono;
    }
    first = false;
  }
  return out.str();
}

}  // namespace supernil
