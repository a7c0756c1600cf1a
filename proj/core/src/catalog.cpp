#include "supernil/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "supernil/errors.hpp"

namespace supernil {

namespace {

BasisIndex xi(unsigned i) { return BasisIndex{Parity::Even, i}; }
BasisIndex yj(unsigned j) { return BasisIndex{Parity::Odd, j}; }

bool is_one(const Scalar& s) {
  return s.is_rational() && s.rational_value() == Rational(1);
}

// Re-expresses s at conductor N; N must be a multiple of s's minimal
// conductor.
Scalar to_conductor(const Scalar& s, unsigned N) {
  const unsigned d = s.minimal_conductor();
  Scalar small = Scalar::zero(d);
  if (!s.project(d, small)) {
    throw DomainError("scalar does not live at its own minimal conductor");
  }
  return small.embedded(N);
}

// Validated, zero-defaulted parameter set at the join conductor.
class Params {
 public:
  Params(const FamilySpec& spec, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : spec.params) {
      if (!allowed.count(key)) {
        throw DomainError("unknown parameter '" + key + "' for family " + spec.name);
      }
      conductor_ = std::lcm(conductor_, value.minimal_conductor());
    }
    for (const auto& [key, value] : spec.params) {
      at_.emplace(key, to_conductor(value, conductor_));
    }
  }

  unsigned conductor() const { return conductor_; }

  Scalar get(const std::string& key) const {
    auto it = at_.find(key);
    return it == at_.end() ? Scalar::zero(conductor_) : it->second;
  }

  // "a" + index accessor for the numbered coefficient runs.
  Scalar run(const std::string& stem, unsigned index) const {
    return get(stem + std::to_string(index));
  }

 private:
  unsigned conductor_ = 1;
  std::map<std::string, Scalar> at_;
};

std::set<std::string> numbered_keys(const std::string& stem, unsigned n,
                                    std::initializer_list<std::string> extra) {
  std::set<std::string> keys(extra);
  for (unsigned t = 4; t <= n; ++t) keys.insert(stem + std::to_string(t));
  return keys;
}

// Accumulates bracket rows, merging repeated pairs and dropping zeros.
class TableBuilder {
 public:
  TableBuilder(unsigned n, unsigned m, unsigned conductor)
      : n_(n), m_(m), conductor_(conductor) {}

  void add(BasisIndex left, BasisIndex right, BasisIndex target, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto key = std::make_pair(left, right);
    auto it = acc_.find(key);
    if (it == acc_.end()) {
      it = acc_.emplace(key, GradedVector(n_, m_, conductor_)).first;
    }
    GradedVector unit = GradedVector::unit(n_, m_, conductor_, target);
    unit.scale(coeff);
    it->second += unit;
  }

  void add(BasisIndex left, BasisIndex right, BasisIndex target) {
    add(left, right, target, Scalar::one(conductor_));
  }

  SuperAlgebra build() const {
    std::vector<BracketEntry> entries;
    for (const auto& [key, value] : acc_) {
      if (value.is_zero()) continue;
      entries.push_back(BracketEntry{key.first, key.second, value});
    }
    return SuperAlgebra(n_, m_, conductor_, entries);
  }

 private:
  unsigned n_, m_, conductor_;
  std::map<std::pair<BasisIndex, BasisIndex>, GradedVector> acc_;
};

void require_dims(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw DomainError("family " + name + " needs " + what);
}

SuperAlgebra build_thm21_even(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 1 && spec.m == 0, spec.name, "m = 0 and n >= 1");
  TableBuilder t(spec.n, 0, p.conductor());
  for (unsigned i = 1; i + 1 <= spec.n; ++i) t.add(xi(i), xi(1), xi(i + 1));
  return t.build();
}

// Single chain with alternating parity: e_{2j-1} = y_j, e_{2j} = x_j.
SuperAlgebra build_thm21_mixed(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 1 && (spec.m == spec.n || spec.m == spec.n + 1),
               spec.name, "m = n or m = n + 1");
  const unsigned total = spec.n + spec.m;
  auto e = [](unsigned i) {
    return (i % 2 == 0) ? xi(i / 2) : yj((i + 1) / 2);
  };
  TableBuilder t(spec.n, spec.m, p.conductor());
  for (unsigned i = 1; i + 1 <= total; ++i) t.add(e(i), e(1), e(i + 1));
  const Scalar two = Scalar::integer(2, p.conductor());
  for (unsigned i = 1; i + 2 <= total; ++i) t.add(e(i), e(2), e(i + 2), two);
  return t.build();
}

SuperAlgebra build_leib_1m(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n == 1 && spec.m >= 2, spec.name, "n = 1 and m >= 2");
  TableBuilder t(1, spec.m, p.conductor());
  for (unsigned i = 1; i + 1 <= spec.m; ++i) t.add(yj(i), xi(1), yj(i + 1));
  return t.build();
}

SuperAlgebra build_leib_n1(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 2 && spec.m == 1, spec.name, "n >= 2 and m = 1");
  const Scalar alpha = p.get("alpha");
  if (!alpha.is_zero() && !is_one(alpha)) {
    throw DomainError("family Leibn1 needs alpha in {0, 1}");
  }
  TableBuilder t(spec.n, 1, p.conductor());
  for (unsigned i = 1; i + 1 <= spec.n; ++i) t.add(xi(i), xi(1), xi(i + 1));
  t.add(yj(1), yj(1), xi(spec.n), alpha);
  return t.build();
}

SuperAlgebra build_leib_22(const FamilySpec& spec, const Params& p, bool variant_a) {
  require_dims(spec.n == 2 && spec.m == 2, spec.name, "n = 2 and m = 2");
  const unsigned N = p.conductor();
  const Scalar half = Scalar::one(N) / Scalar::integer(2, N);
  TableBuilder t(2, 2, N);
  t.add(yj(1), xi(1), yj(2));
  if (variant_a) t.add(xi(1), yj(1), yj(2), half);
  t.add(xi(2), yj(1), yj(2));
  t.add(yj(1), xi(2), yj(2), Scalar::integer(2, N));
  t.add(yj(1), yj(1), xi(2));
  return t.build();
}

// The odd-odd pairing [y_i, y_{m+1-i}] = (-1)^{i+1} x_2 over the full index
// range 1..m; it is symmetric under i -> m+1-i exactly because m is odd,
// which is also what the identity check forces.
SuperAlgebra build_leib_2m(const FamilySpec& spec, const Params& p, bool variant_a) {
  require_dims(spec.n == 2 && spec.m >= 3 && spec.m % 2 == 1, spec.name,
               "n = 2 and odd m >= 3");
  const unsigned N = p.conductor();
  const unsigned m = spec.m;
  TableBuilder t(2, m, N);
  if (variant_a) t.add(xi(1), xi(1), xi(2));
  for (unsigned i = 1; i + 1 <= m; ++i) {
    t.add(yj(i), xi(1), yj(i + 1));
    t.add(xi(1), yj(i), yj(i + 1), Scalar::integer(-1, N));
  }
  for (unsigned i = 1; i <= m; ++i) {
    t.add(yj(i), yj(m + 1 - i), xi(2), Scalar::integer(i % 2 == 1 ? 1 : -1, N));
  }
  return t.build();
}

// Shared x1-column and y1-column of the four two-generator shapes. The even
// chain feeds x_{from}..x_{n-1} into x1; lower starts exclude x2 where x2 is
// not part of the chain.
void two_generator_spine(TableBuilder& t, unsigned n, unsigned m, unsigned N,
                         unsigned chain_from, unsigned odd_chain_top,
                         unsigned xy_top) {
  const Scalar half = Scalar::one(N) / Scalar::integer(2, N);
  t.add(xi(1), xi(1), xi(3));
  for (unsigned i = chain_from; i + 1 <= n; ++i) t.add(xi(i), xi(1), xi(i + 1));
  for (unsigned j = 1; j <= odd_chain_top && j + 1 <= m; ++j)
    t.add(yj(j), xi(1), yj(j + 1));
  t.add(xi(1), yj(1), yj(2), half);
  for (unsigned i = chain_from; i <= xy_top; ++i) t.add(xi(i), yj(1), yj(i), half);
  t.add(yj(1), yj(1), xi(1));
  for (unsigned j = 2; j <= n - 1 && j <= m; ++j) t.add(yj(j), yj(1), xi(j + 1));
}

SuperAlgebra build_family_l(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 3 && spec.m == spec.n - 1, spec.name, "n >= 3 and m = n - 1");
  const unsigned n = spec.n;
  const unsigned N = p.conductor();
  TableBuilder t(n, n - 1, N);
  two_generator_spine(t, n, n - 1, N, /*chain_from=*/2, /*odd_chain_top=*/n - 2,
                      /*xy_top=*/n - 1);
  for (unsigned u = 4; u + 1 <= n; ++u) t.add(xi(1), xi(2), xi(u), p.run("a", u));
  t.add(xi(1), xi(2), xi(n), p.get("theta"));
  for (unsigned j = 2; j + 2 <= n; ++j)
    for (unsigned u = 4; u <= n + 2 - j; ++u)
      t.add(xi(j), xi(2), xi(j + u - 2), p.run("a", u));
  for (unsigned u = 4; u + 1 <= n; ++u) t.add(yj(1), xi(2), yj(u - 1), p.run("a", u));
  t.add(yj(1), xi(2), yj(n - 1), p.get("theta"));
  for (unsigned j = 2; j + 3 <= n; ++j)
    for (unsigned u = 4; u <= n + 1 - j; ++u)
      t.add(yj(j), xi(2), yj(j + u - 2), p.run("a", u));
  return t.build();
}

SuperAlgebra build_family_g(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 3 && spec.m == spec.n - 1, spec.name, "n >= 3 and m = n - 1");
  const unsigned n = spec.n;
  const unsigned N = p.conductor();
  TableBuilder t(n, n - 1, N);
  two_generator_spine(t, n, n - 1, N, /*chain_from=*/3, /*odd_chain_top=*/n - 2,
                      /*xy_top=*/n - 1);
  for (unsigned u = 4; u <= n; ++u) t.add(xi(1), xi(2), xi(u), p.run("b", u));
  t.add(xi(2), xi(2), xi(n), p.get("gamma"));
  for (unsigned j = 3; j + 2 <= n; ++j)
    for (unsigned u = 4; u <= n + 2 - j; ++u)
      t.add(xi(j), xi(2), xi(j + u - 2), p.run("b", u));
  for (unsigned j = 1; j + 3 <= n; ++j)
    for (unsigned u = 4; u <= n + 1 - j; ++u)
      t.add(yj(j), xi(2), yj(j + u - 2), p.run("b", u));
  return t.build();
}

// [x2,x2] repeats the [x1,x2] value; the lone-gamma4 shape the n = 4 table
// suggests is kept as an additive extra that the identity check rejects
// whenever it is nonzero.
SuperAlgebra build_family_m(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 3 && spec.m == spec.n, spec.name, "n >= 3 and m = n");
  const unsigned n = spec.n;
  const unsigned N = p.conductor();
  const Scalar gamma4 = p.get("gamma4");
  if (n < 4 && !gamma4.is_zero()) {
    throw DomainError("family M needs n >= 4 for a nonzero gamma4");
  }
  TableBuilder t(n, n, N);
  two_generator_spine(t, n, n, N, /*chain_from=*/2, /*odd_chain_top=*/n - 1,
                      /*xy_top=*/n);
  for (unsigned u = 4; u + 1 <= n; ++u) {
    t.add(xi(1), xi(2), xi(u), p.run("a", u));
    t.add(xi(2), xi(2), xi(u), p.run("a", u));
  }
  t.add(xi(1), xi(2), xi(n), p.get("theta"));
  t.add(xi(2), xi(2), xi(n), p.get("theta"));
  if (n >= 4) t.add(xi(2), xi(2), xi(4), gamma4);
  for (unsigned j = 3; j + 2 <= n; ++j)
    for (unsigned u = 4; u <= n + 2 - j; ++u)
      t.add(xi(j), xi(2), xi(j + u - 2), p.run("a", u));
  for (unsigned u = 4; u + 1 <= n; ++u) {
    t.add(yj(1), xi(2), yj(u - 1), p.run("a", u));
    t.add(yj(2), xi(2), yj(u), p.run("a", u));
  }
  t.add(yj(1), xi(2), yj(n - 1), p.get("theta"));
  t.add(yj(1), xi(2), yj(n), p.get("tau"));
  t.add(yj(2), xi(2), yj(n), p.get("theta"));
  for (unsigned j = 3; j + 2 <= n; ++j)
    for (unsigned u = 4; u <= n + 2 - j; ++u)
      t.add(yj(j), xi(2), yj(j + u - 2), p.run("a", u));
  return t.build();
}

// The odd chain closes at y_n, which in turn forces [x_n, y1] = y_n/2 and
// with it [x2,x2] = 0: gamma is carried as a parameter but only its zero
// value survives the identity check.
SuperAlgebra build_family_h(const FamilySpec& spec, const Params& p) {
  require_dims(spec.n >= 3 && spec.m == spec.n, spec.name, "n >= 3 and m = n");
  const unsigned n = spec.n;
  const unsigned N = p.conductor();
  TableBuilder t(n, n, N);
  two_generator_spine(t, n, n, N, /*chain_from=*/3, /*odd_chain_top=*/n - 1,
                      /*xy_top=*/n);
  for (unsigned u = 4; u <= n; ++u) t.add(xi(1), xi(2), xi(u), p.run("b", u));
  t.add(xi(2), xi(2), xi(n), p.get("gamma"));
  for (unsigned j = 3; j + 2 <= n; ++j)
    for (unsigned u = 4; u <= n + 2 - j; ++u)
      t.add(xi(j), xi(2), xi(j + u - 2), p.run("b", u));
  for (unsigned u = 4; u <= n; ++u) t.add(yj(1), xi(2), yj(u - 1), p.run("b", u));
  t.add(yj(1), xi(2), yj(n), p.get("delta"));
  for (unsigned j = 2; j + 2 <= n; ++j)
    for (unsigned u = 4; u <= n + 2 - j; ++u)
      t.add(yj(j), xi(2), yj(j + u - 2), p.run("b", u));
  return t.build();
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "Thm21-even", "Thm21-mixed", "Leib1m",   "Leibn1",
      "Leib22-a",   "Leib22-b",    "Leib2m-a", "Leib2m-b",
      "L",          "G",           "M",        "H",
  };
  return names;
}

SuperAlgebra make_family(const FamilySpec& spec, bool verify) {
  SuperAlgebra algebra = [&] {
    const std::set<std::string> none;
    if (spec.name == "Thm21-even") return build_thm21_even(spec, Params(spec, none));
    if (spec.name == "Thm21-mixed") return build_thm21_mixed(spec, Params(spec, none));
    if (spec.name == "Leib1m") return build_leib_1m(spec, Params(spec, none));
    if (spec.name == "Leibn1") return build_leib_n1(spec, Params(spec, {"alpha"}));
    if (spec.name == "Leib22-a") return build_leib_22(spec, Params(spec, none), true);
    if (spec.name == "Leib22-b") return build_leib_22(spec, Params(spec, none), false);
    if (spec.name == "Leib2m-a") return build_leib_2m(spec, Params(spec, none), true);
    if (spec.name == "Leib2m-b") return build_leib_2m(spec, Params(spec, none), false);
    if (spec.name == "L")
      return build_family_l(spec, Params(spec, numbered_keys("a", spec.n, {"theta"})));
    if (spec.name == "G")
      return build_family_g(spec, Params(spec, numbered_keys("b", spec.n, {"gamma"})));
    if (spec.name == "M")
      return build_family_m(
          spec, Params(spec, numbered_keys("a", spec.n, {"theta", "tau", "gamma4"})));
    if (spec.name == "H")
      return build_family_h(
          spec, Params(spec, numbered_keys("b", spec.n, {"delta", "gamma"})));
    throw DomainError("unknown family '" + spec.name + "'");
  }();
  if (verify) {
    const auto violations = algebra.check_superidentity();
    if (!violations.empty()) {
      const auto& v = violations.front();
      std::ostringstream msg;
      msg << "family " << spec.name << " table violates the defining identity at ("
          << v.x.name() << ", " << v.y.name() << ", " << v.z.name()
          << "), residual " << v.residual.str() << " (" << violations.size()
          << " violating triples)";
      throw DomainError(msg.str());
    }
  }
  return algebra;
}

namespace {

unsigned join_conductor(const ParamVector& vec, unsigned extra) {
  unsigned N = extra;
  for (const auto& c : vec) N = std::lcm(N, c.minimal_conductor());
  return N;
}

// S_{m,t}^e at conductor N (t | N), exponent reduced mod t.
Scalar s_power(long m, unsigned t, long e, unsigned N) {
  const long me = ((m * e) % long(t) + long(t)) % long(t);
  return Scalar::root_of_unity(unsigned(me), t, N);
}

}  // namespace

ParamVector op_V(long m, unsigned j, const ParamVector& vec) {
  const std::size_t k = vec.size();
  if (j < 1 || j > k + 1) {
    throw DomainError("V position must lie in 1..k+1");
  }
  if (j == k + 1) {
    const unsigned N = join_conductor(vec, 1);
    return ParamVector(k, Scalar::zero(N));
  }
  if (m < 0 || unsigned(m) >= j) {
    throw DomainError("S_{m,t} needs 0 <= m < t");
  }
  const unsigned N = join_conductor(vec, m == 0 ? 1 : j);
  ParamVector out(k, Scalar::zero(N));
  out[j - 1] = Scalar::one(N);
  for (std::size_t i = j + 1; i <= k; ++i) {
    Scalar weighted = to_conductor(vec[i - 1], N);
    if (m != 0) weighted = s_power(m, j, long(i), N) * weighted;
    out[i - 1] = weighted;
  }
  return out;
}

ParamVector op_W(long m, unsigned s, const ParamVector& vec) {
  if (vec.size() < 2) {
    throw DomainError("W input needs at least one position and a trailing coefficient");
  }
  const std::size_t k = vec.size() - 1;
  std::size_t j = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    if (!vec[i - 1].is_zero()) {
      j = i;
      break;
    }
  }
  if (j == 0 || !is_one(vec[j - 1])) {
    throw DomainError("W input is not in V-normal form");
  }
  if (s < 1 || s > k + 2 - j) {
    throw DomainError("W shift must lie in 1..k+2-j");
  }
  if (s == k + 2 - j) {
    const unsigned N = join_conductor(vec, 1);
    ParamVector out(k + 1, Scalar::zero(N));
    out[j - 1] = Scalar::one(N);
    return out;
  }
  if (s == k + 1 - j) {
    const unsigned N = join_conductor(vec, 1);
    ParamVector out(k + 1, Scalar::zero(N));
    out[j - 1] = Scalar::one(N);
    out[k] = Scalar::one(N);
    return out;
  }
  if (m < 0 || unsigned(m) >= s || unsigned(m) >= j) {
    throw DomainError("S_{m,t} needs 0 <= m < t");
  }
  const unsigned N =
      join_conductor(vec, m == 0 ? 1 : unsigned(std::lcm(j, std::size_t(s))));
  ParamVector out(k + 1, Scalar::zero(N));
  out[j - 1] = Scalar::one(N);
  out[s + j - 1] = Scalar::one(N);
  for (std::size_t i = s + j + 1; i <= k; ++i) {
    Scalar alpha = to_conductor(vec[i - 1], N);
    if (m != 0) {
      alpha = s_power(m, s, long(i) - long(j), N) * (alpha / s_power(m, j, long(i), N));
    }
    out[i - 1] = alpha;
  }
  Scalar trailer = to_conductor(vec[k], N);
  if (m != 0) trailer = s_power(m, s, long(k) + 6 - 2 * long(j), N) * trailer;
  out[k] = trailer;
  return out;
}

namespace {

Scalar sample_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  return Scalar::from_rational(Rational(num(rng), den(rng)), 1);
}

ParamVector sample_vector(std::mt19937_64& rng, std::size_t k) {
  ParamVector vec;
  vec.reserve(k);
  for (std::size_t i = 0; i < k; ++i) vec.push_back(sample_scalar(rng));
  return vec;
}

// Spreads vector positions 1..count over numbered keys stem{4}..stem{count+3}.
void assign_run(FamilySpec& spec, const std::string& stem, const ParamVector& vec,
                std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    spec.params[stem + std::to_string(i + 4)] = vec[i];
  }
}

void push_entry(std::vector<CatalogEntry>& out, std::string label, FamilySpec spec) {
  SuperAlgebra algebra = make_family(spec);
  out.push_back(CatalogEntry{std::move(label), std::move(spec), std::move(algebra)});
}

}  // namespace

std::vector<CatalogEntry> classified_list(unsigned n, unsigned m, std::uint64_t seed) {
  if (n < 3 || (m != n - 1 && m != n)) {
    throw DomainError("the classification roster covers m = n - 1 and m = n with n >= 3");
  }
  std::mt19937_64 rng(seed);
  std::vector<CatalogEntry> out;
  const Scalar one = Scalar::one(1);
  if (m == n - 1) {
    for (unsigned j = 1; j + 3 <= n; ++j) {
      for (unsigned mbar = 0; mbar < j; ++mbar) {
        ParamVector v = op_V(mbar, j, sample_vector(rng, n - 3));
        FamilySpec spec{"L", n, m, {}};
        assign_run(spec, "a", v, n - 3);
        spec.params["theta"] = s_power(mbar, j, long(n) - 3, j) * sample_scalar(rng).embedded(j);
        push_entry(out, "L-V-j" + std::to_string(j) + "-m" + std::to_string(mbar),
                   std::move(spec));
      }
    }
    push_entry(out, "L-theta1", FamilySpec{"L", n, m, {{"theta", one}}});
    push_entry(out, "L-zeros", FamilySpec{"L", n, m, {}});
    push_entry(out, "G-gamma1", FamilySpec{"G", n, m, {{"gamma", one}}});
    push_entry(out, "G-zeros", FamilySpec{"G", n, m, {}});
    for (unsigned j = 1; j + 3 <= n; ++j) {
      // W acts on the V-normal form of (b4..bn) extended by gamma.
      for (unsigned s = 1; s + j + 1 <= n; ++s) {
        ParamVector v = op_V(0, j, sample_vector(rng, n - 3));
        v.push_back(sample_scalar(rng));
        ParamVector w = op_W(0, s, v);
        FamilySpec spec{"G", n, m, {}};
        assign_run(spec, "b", w, n - 3);
        spec.params["gamma"] = w[n - 3];
        push_entry(out, "G-W-j" + std::to_string(j) + "-s" + std::to_string(s),
                   std::move(spec));
      }
    }
    return out;
  }
  for (unsigned j = 1; j + 2 <= n; ++j) {
    // Positions 1..n-2 cover a4..an with theta in the trailing slot; the
    // leftover scalar normalizes tau.
    for (unsigned mbar = 0; mbar < j; ++mbar) {
      ParamVector v = op_V(mbar, j, sample_vector(rng, n - 2));
      FamilySpec spec{"M", n, m, {}};
      assign_run(spec, "a", v, n - 3);
      spec.params["theta"] = v[n - 3];
      spec.params["tau"] = s_power(mbar, j, long(n) - 3, j) * sample_scalar(rng).embedded(j);
      push_entry(out, "M-V-j" + std::to_string(j) + "-m" + std::to_string(mbar),
                 std::move(spec));
    }
  }
  push_entry(out, "M-tau1", FamilySpec{"M", n, m, {{"tau", one}}});
  push_entry(out, "M-zeros", FamilySpec{"M", n, m, {}});
  push_entry(out, "H-delta1", FamilySpec{"H", n, m, {{"delta", one}}});
  push_entry(out, "H-zeros", FamilySpec{"H", n, m, {}});
  for (unsigned j = 1; j + 3 <= n; ++j) {
    // The identity forces [x2,x2] = 0 in H, so W normalizes the free
    // parameters (b4..bn, delta) exactly as it does (b4..bn, gamma) in G.
    for (unsigned s = 1; s + j + 1 <= n; ++s) {
      ParamVector v = op_V(0, j, sample_vector(rng, n - 3));
      v.push_back(sample_scalar(rng));
      ParamVector w = op_W(0, s, v);
      FamilySpec spec{"H", n, m, {}};
      assign_run(spec, "b", w, n - 3);
      spec.params["delta"] = w[n - 3];
      push_entry(out, "H-W-j" + std::to_string(j) + "-s" + std::to_string(s),
                 std::move(spec));
    }
  }
  return out;
}

}  // namespace supernil
