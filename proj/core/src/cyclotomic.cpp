#include "supernil/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <utility>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients, not trimmed unless stated

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

/// Quotient and remainder of a by b; b trimmed and nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size()) {
    Rational f = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

/// Reduction context for one conductor, built once and cached.
struct Context {
  unsigned n = 1;
  unsigned phi = 1;
  Poly modulus;                  // cyclotomic polynomial, size phi+1, monic
  std::vector<Poly> highPowers;  // x^(phi+k) mod modulus for k in [0, phi-2]

  /// x^e mod modulus, any e >= 0, as a length-phi vector.
  Poly power(unsigned long e) const {
    Poly v(phi, Rational(0));
    if (e < phi) {
      v[e] = Rational(1);
      return v;
    }
    Poly cur(phi, Rational(0));
    cur[phi - 1] = Rational(1);
    for (unsigned long step = phi - 1; step < e; ++step) {
      // multiply by x, fold the overflow term through the modulus
      Rational top = cur[phi - 1];
      for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = Rational(0);
      if (!top.is_zero()) {
        for (unsigned i = 0; i < phi; ++i) cur[i] -= top * modulus[i];
      }
    }
    return cur;
  }
};

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

Poly cyclotomic_poly_impl(unsigned n, std::map<unsigned, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(n + 1, Rational(0));  // x^n - 1
  num[0] = Rational(-1);
  num[n] = Rational(1);
  Poly acc = num;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    Poly phid = cyclotomic_poly_impl(d, cache);
    auto [q, r] = divmod(acc, phid);
    trim(r);
    if (!r.empty()) throw Error("internal: cyclotomic polynomial division left a remainder");
    acc = std::move(q);
  }
  cache.emplace(n, acc);
  return acc;
}

const Context& context(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Context>> cache;
  static std::map<unsigned, Poly> polyCache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  if (n == 0) throw DomainError("conductor must be positive");
  auto ctx = std::make_unique<Context>();
  ctx->n = n;
  ctx->modulus = cyclotomic_poly_impl(n, polyCache);
  ctx->phi = static_cast<unsigned>(ctx->modulus.size() - 1);
  ctx->highPowers.reserve(ctx->phi > 1 ? ctx->phi - 1 : 0);
  for (unsigned k = 0; k + 1 < ctx->phi; ++k) ctx->highPowers.push_back(ctx->power(ctx->phi + k));
  const Context& ref = *ctx;
  cache.emplace(n, std::move(ctx));
  return ref;
}

/// Reduces an untrimmed product (degree <= 2*phi-2) into the power basis.
std::vector<Rational> reduce_product(const Context& ctx, const Poly& p) {
  std::vector<Rational> out(ctx.phi, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (i < ctx.phi) {
      out[i] += p[i];
    } else {
      const Poly& rep = ctx.highPowers[i - ctx.phi];
      for (unsigned j = 0; j < ctx.phi; ++j) out[j] += p[i] * rep[j];
    }
  }
  return out;
}

/// Extended Euclid in Q[x]: returns u with u*a = gcd (mod m), gcd constant
/// because m is irreducible and a nonzero mod m.
Poly invert_mod(const Poly& aIn, const Poly& m) {
  Poly r0 = m;
  Poly r1 = aIn;
  trim(r1);
  if (r1.empty()) throw DomainError("inverse of zero scalar");
  Poly s0;          // coefficient of a in r0 = m: 0
  Poly s1 = {Rational(1)};
  while (true) {
    trim(r1);
    if (r1.size() == 1) break;  // constant gcd reached
    auto [q, r2] = divmod(r0, r1);
    Poly s2 = s0;
    Poly qs = mul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational c = r1[0].inverse();
  for (auto& v : s1) v *= c;
  auto [q, rem] = divmod(s1, m);
  (void)q;
  return rem;
}

/// Gaussian solve A*x = b over the rationals; A given column-major as the
/// images of the candidate basis. Returns false when inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> cols, std::vector<Rational> b,
                    std::vector<Rational>& out) {
  const std::size_t rows = b.size();
  const std::size_t ncols = cols.size();
  // build augmented row-major matrix
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1, Rational(0)));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][ncols] = b[i];
  std::vector<std::size_t> pivotCol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = m[r][c].inverse();
    for (std::size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivotCol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!m[i][ncols].is_zero()) return false;
  }
  out.assign(ncols, Rational(0));
  for (std::size_t k = 0; k < pivotCol.size(); ++k) out[pivotCol[k]] = m[k][ncols];
  return true;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) throw DomainError("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(unsigned n) { return context(n).modulus; }

Scalar::Scalar(unsigned conductor) : conductor_(conductor) {
  c_.assign(context(conductor).phi, Rational(0));
}

Scalar Scalar::one(unsigned conductor) {
  Scalar s(conductor);
  s.c_[0] = Rational(1);
  return s;
}

Scalar Scalar::from_rational(const Rational& r, unsigned conductor) {
  Scalar s(conductor);
  s.c_[0] = r;
  return s;
}

Scalar Scalar::root_of_unity(long m, unsigned t, unsigned conductor) {
  if (t == 0 || conductor % t != 0) {
    throw DomainError("root_of_unity: order " + std::to_string(t) +
                      " does not divide conductor " + std::to_string(conductor));
  }
  if (m < 0 || static_cast<unsigned long>(m) >= t) {
    throw DomainError("root_of_unity: index out of range [0, t)");
  }
  const Context& ctx = context(conductor);
  unsigned long e = static_cast<unsigned long>(m) * (conductor / t);
  Scalar s(conductor);
  s.c_ = ctx.power(e);
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& v : c_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + str());
  return c_[0];
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

namespace {
void require_same_conductor(const Scalar& a, const Scalar& b, const char* op) {
  if (a.conductor() != b.conductor()) {
    throw MismatchError(std::string("conductor mismatch in ") + op + ": " +
                        std::to_string(a.conductor()) + " vs " + std::to_string(b.conductor()));
  }
}
}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_conductor(*this, o, "scalar addition");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_conductor(*this, o, "scalar subtraction");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_conductor(*this, o, "scalar multiplication");
  const Context& ctx = context(conductor_);
  Poly prod = mul(c_, o.c_);
  c_ = reduce_product(ctx, prod);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  const Context& ctx = context(conductor_);
  Poly inv = invert_mod(c_, ctx.modulus);
  Scalar r(conductor_);
  for (std::size_t i = 0; i < inv.size(); ++i) r.c_[i] = inv[i];
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_conductor(*this, o, "scalar division");
  *this *= o.inverse();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_conductor(a, b, "scalar comparison");
  return a.c_ == b.c_;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] < b.c_[i]) return -1;
    if (b.c_[i] < a.c_[i]) return 1;
  }
  return 0;
}

Scalar Scalar::embedded(unsigned conductor) const {
  if (conductor % conductor_ != 0) {
    throw DomainError("embed: conductor " + std::to_string(conductor_) +
                      " does not divide " + std::to_string(conductor));
  }
  if (conductor == conductor_) return *this;
  const Context& ctx = context(conductor);
  unsigned long k = conductor / conductor_;
  Scalar out(conductor);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Poly rep = ctx.power(static_cast<unsigned long>(i) * k);
    for (unsigned j = 0; j < ctx.phi; ++j) out.c_[j] += c_[i] * rep[j];
  }
  return out;
}

bool Scalar::project(unsigned conductor, Scalar& out) const {
  if (conductor_ % conductor != 0) {
    throw DomainError("project: conductor " + std::to_string(conductor) +
                      " does not divide " + std::to_string(conductor_));
  }
  if (conductor == conductor_) {
    out = *this;
    return true;
  }
  const Context& big = context(conductor_);
  unsigned subPhi = euler_phi(conductor);
  unsigned long k = conductor_ / conductor;
  std::vector<std::vector<Rational>> cols;
  cols.reserve(subPhi);
  for (unsigned j = 0; j < subPhi; ++j) {
    cols.push_back(big.power(static_cast<unsigned long>(j) * k));
  }
  std::vector<Rational> solved;
  if (!solve_rational(std::move(cols), c_, solved)) return false;
  Scalar r(conductor);
  for (unsigned j = 0; j < subPhi; ++j) r.c_[j] = solved[j];
  out = std::move(r);
  return true;
}

unsigned Scalar::minimal_conductor() const {
  for (unsigned d : divisors(conductor_)) {
    Scalar tmp(1);
    if (project(d, tmp)) return d;
  }
  return conductor_;
}

namespace {

/// Recursive-descent parser for the scalar literal grammar.
class LiteralParser {
 public:
  LiteralParser(const std::string& text, unsigned conductor)
      : s_(text), conductor_(conductor) {}

  Scalar run() {
    Scalar v = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("scalar literal '" + s_ + "': " + why + " at offset " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar parse_expr() {
    Scalar acc = Scalar::zero(conductor_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      Scalar t = parse_term();
      acc += sign < 0 ? -t : t;
      first = false;
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Scalar parse_term() {
    Scalar v = parse_factor();
    while (eat('*')) v *= parse_factor();
    return v;
  }

  Scalar parse_factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected factor");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -parse_factor();
    }
    if (c == 'z') {
      ++pos_;
      unsigned long e = 1;
      if (eat('^')) e = parse_uint();
      const unsigned N = conductor_;
      Scalar z = Scalar::root_of_unity(static_cast<long>(e % N), N, N);
      return z;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_integer();
      if (eat('/')) {
        mpz_class den = parse_integer();
        if (sgn(den) == 0) fail("zero denominator");
        return Scalar::from_rational(Rational(num, den), conductor_);
      }
      return Scalar::from_rational(Rational(num), conductor_);
    }
    fail("unexpected character");
  }

  unsigned long parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  mpz_class parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  unsigned conductor_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text, unsigned conductor) {
  return LiteralParser(text, conductor).run();
}

std::string Scalar::str() const {
  std::string out;
  bool first = true;
  for (std::size_t idx = c_.size(); idx-- > 0;) {
    const Rational& c = c_[idx];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    std::string piece;
    if (idx == 0) {
      piece = mag.str();
    } else {
      std::string zpart = idx == 1 ? "z" : "z^" + std::to_string(idx);
      if (mag.is_one()) {
        piece = zpart;
      } else if (mag.is_integer()) {
        piece = mag.str() + "*" + zpart;
      } else {
        piece = "(" + mag.str() + ")*" + zpart;
      }
    }
    if (first) {
      out = neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  if (first) return "0";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace supernil
