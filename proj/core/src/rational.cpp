#include "supernil/rational.hpp"

#include <cctype>
#include <ostream>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) : v_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(make_canonical(num, den)) {}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  std::string::size_type slash = s.find('/');
  std::string numPart = slash == std::string::npos ? s : s.substr(0, slash);
  std::string denPart = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  auto checkDigits = [](const std::string& p, bool signAllowed) {
    if (p.empty()) return false;
    std::string::size_type i = 0;
    if (signAllowed && (p[0] == '+' || p[0] == '-')) i = 1;
    if (i == p.size()) return false;
    for (; i < p.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    }
    return true;
  };
  if (!checkDigits(numPart, true) || !checkDigits(denPart, false)) {
    throw ParseError("malformed rational literal: '" + text + "'");
  }
  mpz_class num(numPart), den(denPart);
  if (sgn(den) == 0) throw ParseError("rational literal with zero denominator: '" + text + "'");
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace supernil
