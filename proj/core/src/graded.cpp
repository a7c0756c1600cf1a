#include "supernil/graded.hpp"

#include <cctype>

#include "supernil/errors.hpp"

namespace supernil {

BasisIndex parse_basis_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y')) {
    throw ParseError("basis name must be x<i> or y<j>, got '" + name + "'");
  }
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      throw ParseError("basis name must be x<i> or y<j>, got '" + name + "'");
    }
  }
  unsigned long idx = std::stoul(name.substr(1));
  if (idx == 0) throw ParseError("basis indices are 1-based, got '" + name + "'");
  return BasisIndex{name[0] == 'x' ? Parity::Even : Parity::Odd,
                    static_cast<unsigned>(idx)};
}

GradedVector GradedVector::unit(unsigned n, unsigned m, unsigned conductor, BasisIndex at) {
  GradedVector v(n, m, conductor);
  if (at.parity == Parity::Even) {
    if (at.index < 1 || at.index > n) throw DomainError("basis index out of range: " + at.name());
    v.even[at.index - 1] = Scalar::one(conductor);
  } else {
    if (at.index < 1 || at.index > m) throw DomainError("basis index out of range: " + at.name());
    v.odd[at.index - 1] = Scalar::one(conductor);
  }
  return v;
}

bool GradedVector::is_zero() const {
  for (const auto& c : even) {
    if (!c.is_zero()) return false;
  }
  for (const auto& c : odd) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool GradedVector::is_homogeneous(Parity p) const {
  const auto& other = p == Parity::Even ? odd : even;
  for (const auto& c : other) {
    if (!c.is_zero()) return false;
  }
  return true;
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
  if (even.size() != o.even.size() || odd.size() != o.odd.size()) {
    throw MismatchError("graded vector dimension mismatch");
  }
  for (std::size_t i = 0; i < even.size(); ++i) even[i] += o.even[i];
  for (std::size_t i = 0; i < odd.size(); ++i) odd[i] += o.odd[i];
  return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
  if (even.size() != o.even.size() || odd.size() != o.odd.size()) {
    throw MismatchError("graded vector dimension mismatch");
  }
  for (std::size_t i = 0; i < even.size(); ++i) even[i] -= o.even[i];
  for (std::size_t i = 0; i < odd.size(); ++i) odd[i] -= o.odd[i];
  return *this;
}

GradedVector& GradedVector::scale(const Scalar& c) {
  for (auto& v : even) v *= c;
  for (auto& v : odd) v *= c;
  return *this;
}

std::vector<Scalar> GradedVector::concat() const {
  std::vector<Scalar> row = even;
  row.insert(row.end(), odd.begin(), odd.end());
  return row;
}

GradedVector GradedVector::split(const std::vector<Scalar>& row, unsigned n, unsigned m) {
  if (row.size() != static_cast<std::size_t>(n) + m) {
    throw MismatchError("row length does not match ambient dimensions");
  }
  GradedVector v;
  v.even.assign(row.begin(), row.begin() + n);
  v.odd.assign(row.begin() + n, row.end());
  return v;
}

std::string GradedVector::str() const {
  std::string out;
  auto add = [&out](const Scalar& c, const std::string& name) {
    if (c.is_zero()) return;
    std::string cs = c.str();
    std::string piece;
    auto plain_integer = [](const std::string& s) {
      std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      }
      return true;
    };
    if (cs == "1") {
      piece = name;
    } else if (cs == "-1") {
      piece = "-" + name;
    } else if (plain_integer(cs)) {
      piece = cs + "*" + name;
    } else {
      piece = "(" + cs + ")*" + name;
    }
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  };
  for (std::size_t i = 0; i < even.size(); ++i) add(even[i], "x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < odd.size(); ++i) add(odd[i], "y" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

}  // namespace supernil
