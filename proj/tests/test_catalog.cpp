#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "supernil/catalog.hpp"
#include "supernil/errors.hpp"
#include "supernil/invariants.hpp"
#include "test_support.hpp"

using namespace supernil;
using testsupport::entry;

namespace {

Scalar rat(long num, long den = 1) {
  return Scalar::from_rational(Rational(num, den), 1);
}

FamilySpec random_params(const std::string& name, unsigned n, unsigned m,
                         std::mt19937& rng) {
  FamilySpec spec{name, n, m, {}};
  auto draw = [&rng] { return testsupport::random_rational_scalar(rng, 1); };
  if (name == "L" || name == "M") {
    for (unsigned t = 4; t <= n; ++t) spec.params["a" + std::to_string(t)] = draw();
    spec.params["theta"] = draw();
    if (name == "M") spec.params["tau"] = draw();
  } else if (name == "G" || name == "H") {
    for (unsigned t = 4; t <= n; ++t) spec.params["b" + std::to_string(t)] = draw();
    if (name == "G") spec.params["gamma"] = draw();
    if (name == "H") spec.params["delta"] = draw();
  } else if (name == "Leibn1") {
    spec.params["alpha"] = rat(std::uniform_int_distribution<int>(0, 1)(rng));
  }
  return spec;
}

GradedVector unit_vec(const SuperAlgebra& a, const BasisIndex& b) {
  return GradedVector::unit(a.even_dim(), a.odd_dim(), a.conductor(), b);
}

}  // namespace

TEST_CASE("two-generator family tables carry the documented anchor products") {
  const SuperAlgebra l = make_family(FamilySpec{"L", 5, 4, {}});
  CHECK(l.basis_bracket({Parity::Even, 2}, {Parity::Even, 1}) ==
        unit_vec(l, {Parity::Even, 3}));
  GradedVector half_y2 = unit_vec(l, {Parity::Odd, 2});
  half_y2.scale(Scalar::one(1) / Scalar::integer(2, 1));
  CHECK(l.basis_bracket({Parity::Even, 1}, {Parity::Odd, 1}) == half_y2);
  CHECK(l.basis_bracket({Parity::Odd, 1}, {Parity::Odd, 1}) ==
        unit_vec(l, {Parity::Even, 1}));
}

TEST_CASE("chain families reduce to their bare chains") {
  const SuperAlgebra leib31 = make_family(FamilySpec{"Leibn1", 3, 1, {}});
  CHECK(leib31.table().size() == 2);
  CHECK(leib31.basis_bracket({Parity::Even, 1}, {Parity::Even, 1}) ==
        unit_vec(leib31, {Parity::Even, 2}));
  CHECK(leib31.basis_bracket({Parity::Even, 2}, {Parity::Even, 1}) ==
        unit_vec(leib31, {Parity::Even, 3}));

  const SuperAlgebra even4 = make_family(FamilySpec{"Thm21-even", 4, 0, {}});
  const SeriesReport series = central_series(even4);
  CHECK(series.nilpotent);
  CHECK(series.nilindex == 5);
  CHECK(minimal_generator_count(even4) == 1);

  const SuperAlgebra odd = make_family(FamilySpec{"Leib1m", 1, 4, {}});
  CHECK(central_series(odd).nilindex == 5);
}

TEST_CASE("mixed maximal-nilindex family matches the hand-built chain model") {
  for (auto [n, m] : {std::pair<unsigned, unsigned>{2, 3}, {3, 3}, {2, 2}}) {
    const SuperAlgebra built = make_family(FamilySpec{"Thm21-mixed", n, m, {}});
    const SuperAlgebra model = testsupport::alternating_chain(n, m);
    for (const auto& left : built.basis_order()) {
      for (const auto& right : built.basis_order()) {
        CAPTURE(n);
        CAPTURE(m);
        CHECK(built.basis_bracket(left, right) == model.basis_bracket(left, right));
      }
    }
  }
}

TEST_CASE("every family passes the identity check at random parameter points") {
  std::mt19937 rng(2026);
  const std::vector<FamilySpec> shapes = {
      {"Thm21-even", 5, 0, {}}, {"Thm21-mixed", 3, 4, {}}, {"Leib1m", 1, 5, {}},
      {"Leibn1", 4, 1, {}},     {"Leib22-a", 2, 2, {}},    {"Leib22-b", 2, 2, {}},
      {"Leib2m-a", 2, 5, {}},   {"Leib2m-b", 2, 3, {}},    {"L", 5, 4, {}},
      {"G", 6, 5, {}},          {"M", 4, 4, {}},           {"H", 6, 6, {}},
  };
  for (const auto& shape : shapes) {
    for (int trial = 0; trial < 3; ++trial) {
      FamilySpec spec = random_params(shape.name, shape.n, shape.m, rng);
      CAPTURE(spec.name);
      const SuperAlgebra a = make_family(spec);
      CHECK(a.check_superidentity().empty());
    }
  }
}

TEST_CASE("two-generator families have nilindex n+m and profile (n-1,1|m)") {
  std::mt19937 rng(7);
  for (const std::string& name : {"L", "G", "M", "H"}) {
    for (unsigned n : {4u, 5u}) {
      const unsigned m = (name == "M" || name == "H") ? n : n - 1;
      const SuperAlgebra a = make_family(random_params(name, n, m, rng));
      CAPTURE(name);
      CAPTURE(n);
      const SeriesReport series = central_series(a);
      CHECK(series.nilpotent);
      CHECK(series.nilindex == n + m);
      CHECK(minimal_generator_count(a) == 2);
      const CharSequence cs = char_sequence(a);
      CHECK(cs.c0.blocks == std::vector<unsigned>{n - 1, 1});
      CHECK(cs.c1.blocks == std::vector<unsigned>{m});
    }
  }
}

TEST_CASE("second-generator column repeats across the two chain generators") {
  std::mt19937 rng(11);
  const SuperAlgebra m6 = make_family(random_params("M", 6, 6, rng));
  CHECK(m6.basis_bracket({Parity::Even, 2}, {Parity::Even, 2}) ==
        m6.basis_bracket({Parity::Even, 1}, {Parity::Even, 2}));

  const SuperAlgebra h5 = make_family(random_params("H", 5, 5, rng));
  CHECK(h5.basis_bracket({Parity::Even, 2}, {Parity::Even, 2}).is_zero());
  CHECK(h5.basis_bracket({Parity::Odd, 4}, {Parity::Even, 1}) ==
        unit_vec(h5, {Parity::Odd, 5}));
  GradedVector half_y5 = unit_vec(h5, {Parity::Odd, 5});
  half_y5.scale(Scalar::one(1) / Scalar::integer(2, 1));
  CHECK(h5.basis_bracket({Parity::Even, 5}, {Parity::Odd, 1}) == half_y5);
}

TEST_CASE("inconsistent coefficient choices are rejected, bypass exposes them") {
  FamilySpec bad_m{"M", 5, 5, {{"gamma4", rat(1)}}};
  CHECK_THROWS_AS((void)make_family(bad_m), DomainError);
  const SuperAlgebra forced = make_family(bad_m, false);
  CHECK(!forced.check_superidentity().empty());

  FamilySpec bad_h{"H", 5, 5, {{"gamma", rat(2)}}};
  CHECK_THROWS_AS((void)make_family(bad_h), DomainError);
  CHECK(!make_family(bad_h, false).check_superidentity().empty());

  CHECK_THROWS_AS((void)make_family(FamilySpec{"M", 3, 3, {{"gamma4", rat(1)}}}),
                  DomainError);
  CHECK_NOTHROW((void)make_family(FamilySpec{"M", 3, 3, {{"gamma4", rat(0)}}}));
}

TEST_CASE("odd-pair family needs odd m and the full pairing range") {
  CHECK_NOTHROW((void)make_family(FamilySpec{"Leib2m-a", 2, 3, {}}));
  CHECK_NOTHROW((void)make_family(FamilySpec{"Leib2m-b", 2, 7, {}}));
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Leib2m-a", 2, 4, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Leib2m-b", 2, 6, {}}), DomainError);

  // Dropping the i = m pairing term leaves a residual, which is why the
  // constructor emits the full range.
  const SuperAlgebra shape = testsupport::abelian(2, 3);
  std::vector<BracketEntry> rows;
  for (unsigned i = 1; i <= 2; ++i) {
    const std::string yi = "y" + std::to_string(i);
    const std::string next = "y" + std::to_string(i + 1);
    rows.push_back(entry(shape, yi, "x1", next));
    rows.push_back(entry(shape, "x1", yi, next, -1));
  }
  rows.push_back(entry(shape, "y1", "y3", "x2"));
  rows.push_back(entry(shape, "y2", "y2", "x2", -1));
  const SuperAlgebra truncated(2, 3, 1, rows);
  CHECK(!truncated.check_superidentity().empty());
}

TEST_CASE("family requests with the wrong shape are rejected") {
  CHECK_THROWS_AS((void)make_family(FamilySpec{"L", 4, 4, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"H", 5, 4, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Thm21-even", 3, 1, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Thm21-mixed", 3, 5, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Leib1m", 2, 3, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Leibn1", 3, 2, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Leib22-a", 2, 3, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"nope", 3, 2, {}}), DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"Leibn1", 3, 1, {{"alpha", rat(2)}}}),
                  DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"L", 5, 4, {{"b4", rat(1)}}}),
                  DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"L", 5, 4, {{"a9", rat(1)}}}),
                  DomainError);
  CHECK_THROWS_AS((void)make_family(FamilySpec{"G", 5, 4, {{"gamma4", rat(1)}}}),
                  DomainError);
}

TEST_CASE("square-zero coefficient splits the one-odd-generator family") {
  const SuperAlgebra plain = make_family(FamilySpec{"Leibn1", 4, 1, {}});
  const SuperAlgebra squared =
      make_family(FamilySpec{"Leibn1", 4, 1, {{"alpha", rat(1)}}});
  CHECK(invariant_fingerprint(plain) != invariant_fingerprint(squared));
  CHECK(squared.basis_bracket({Parity::Odd, 1}, {Parity::Odd, 1}) ==
        unit_vec(squared, {Parity::Even, 4}));
}

TEST_CASE("parameters join into the smallest common cyclotomic field") {
  FamilySpec spec{"L", 5, 4, {}};
  spec.params["a4"] = Scalar::root_of_unity(1, 3, 12);   // cube root, conductor 3
  spec.params["theta"] = Scalar::root_of_unity(1, 4, 12);  // i, conductor 4
  const SuperAlgebra a = make_family(spec);
  CHECK(a.conductor() == 12);

  FamilySpec folded{"L", 5, 4, {{"a4", Scalar::root_of_unity(3, 6, 12)}}};
  CHECK(make_family(folded).conductor() == 1);  // zeta_6^3 = -1 is rational

  FamilySpec rational{"L", 5, 4, {{"theta", rat(2, 3)}}};
  CHECK(make_family(rational).conductor() == 1);
}

TEST_CASE("position normalizer pins one slot and twists the tail") {
  const ParamVector abc = {rat(5), rat(-2), rat(7)};
  const ParamVector zeroed = op_V(0, 4, abc);
  REQUIRE(zeroed.size() == 3);
  for (const auto& c : zeroed) CHECK(c.is_zero());

  const ParamVector lead = op_V(0, 1, abc);
  CHECK(lead[0] == Scalar::one(1));
  CHECK(lead[1] == rat(-2));
  CHECK(lead[2] == rat(7));

  // S_{1,2} = -1, so position 3 flips sign.
  const ParamVector twisted = op_V(1, 2, abc);
  CHECK(twisted[0].is_zero());
  CHECK(twisted[1] == Scalar::one(2));
  CHECK(twisted[2] == Scalar::integer(-7, 2));

  CHECK_THROWS_AS((void)op_V(0, 0, abc), DomainError);
  CHECK_THROWS_AS((void)op_V(0, 5, abc), DomainError);
  CHECK_THROWS_AS((void)op_V(2, 2, abc), DomainError);
  CHECK_THROWS_AS((void)op_V(-1, 2, abc), DomainError);
}

TEST_CASE("shift normalizer plants the second pin and rescales the trailer") {
  const ParamVector in = {Scalar::one(1), rat(3), rat(-1), rat(4), rat(9)};
  const ParamVector shifted = op_W(0, 1, in);
  REQUIRE(shifted.size() == 5);
  CHECK(shifted[0] == Scalar::one(1));
  CHECK(shifted[1] == Scalar::one(1));
  CHECK(shifted[2] == rat(-1));
  CHECK(shifted[3] == rat(4));
  CHECK(shifted[4] == rat(9));

  const ParamVector drop_tail = op_W(0, 4, in);
  CHECK(drop_tail[0] == Scalar::one(1));
  CHECK(drop_tail[3].is_zero());
  CHECK(drop_tail[4] == Scalar::one(1));

  const ParamVector unit_only = op_W(0, 5, in);
  CHECK(unit_only[0] == Scalar::one(1));
  for (std::size_t i = 1; i < 5; ++i) CHECK(unit_only[i].is_zero());

  const ParamVector mid = {Scalar::zero(1), Scalar::one(1), rat(2), rat(5)};
  const ParamVector mid_shift = op_W(0, 1, mid);
  CHECK(mid_shift[1] == Scalar::one(1));
  CHECK(mid_shift[2] == Scalar::one(1));
  CHECK(mid_shift[3] == rat(5));

  CHECK_THROWS_AS((void)op_W(0, 0, in), DomainError);
  CHECK_THROWS_AS((void)op_W(0, 6, in), DomainError);
  CHECK_THROWS_AS((void)op_W(1, 1, in), DomainError);
  const ParamVector off_form = {Scalar::zero(1), rat(2), rat(1)};
  CHECK_THROWS_AS((void)op_W(0, 1, off_form), DomainError);
  const ParamVector all_zero = {Scalar::zero(1), Scalar::zero(1)};
  CHECK_THROWS_AS((void)op_W(0, 1, all_zero), DomainError);
}

TEST_CASE("classification roster enumerates labeled consistent members") {
  const auto even_side = classified_list(5, 4, 99);
  // L-V: j=1 (1) + j=2 (2); 4 fixed members; G-W: j=1 s<=3, j=2 s<=2.
  CHECK(even_side.size() == 12);
  std::set<std::string> labels;
  for (const auto& e : even_side) {
    labels.insert(e.label);
    CHECK(e.algebra.check_superidentity().empty());
    CHECK(central_series(e.algebra).nilindex == 9);
  }
  CHECK(labels.size() == even_side.size());
  CHECK(labels.count("L-zeros") == 1);
  CHECK(labels.count("L-theta1") == 1);
  CHECK(labels.count("G-gamma1") == 1);
  CHECK(labels.count("G-W-j1-s3") == 1);

  const auto odd_side = classified_list(5, 5, 99);
  // M-V: 1+2+3; 4 fixed members; H-W: j=1 s<=3, j=2 s<=2.
  CHECK(odd_side.size() == 15);
  for (const auto& e : odd_side) {
    CHECK(central_series(e.algebra).nilindex == 10);
    if (e.spec.name == "H") {
      CHECK(e.algebra.basis_bracket({Parity::Even, 2}, {Parity::Even, 2}).is_zero());
    }
  }

  CHECK_THROWS_AS((void)classified_list(5, 3, 1), DomainError);
  CHECK_THROWS_AS((void)classified_list(2, 2, 1), DomainError);
}

TEST_CASE("roster sampling is seed-deterministic") {
  const auto first = classified_list(6, 5, 31);
  const auto again = classified_list(6, 5, 31);
  const auto other = classified_list(6, 5, 32);
  REQUIRE(first.size() == again.size());
  REQUIRE(first.size() == other.size());
  bool any_param_differs = false;
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].label == again[i].label);
    CHECK(first[i].label == other[i].label);
    CHECK(first[i].spec.params == again[i].spec.params);
    if (first[i].spec.params != other[i].spec.params) any_param_differs = true;
  }
  CHECK(any_param_differs);
}

TEST_CASE("every listed family name builds at its smallest shape") {
  const std::map<std::string, std::pair<unsigned, unsigned>> smallest = {
      {"Thm21-even", {3, 0}}, {"Thm21-mixed", {2, 2}}, {"Leib1m", {1, 2}},
      {"Leibn1", {2, 1}},     {"Leib22-a", {2, 2}},    {"Leib22-b", {2, 2}},
      {"Leib2m-a", {2, 3}},   {"Leib2m-b", {2, 3}},    {"L", {3, 2}},
      {"G", {3, 2}},          {"M", {3, 3}},           {"H", {3, 3}},
  };
  CHECK(family_names().size() == smallest.size());
  for (const auto& name : family_names()) {
    REQUIRE(smallest.count(name) == 1);
    const auto [n, m] = smallest.at(name);
    CAPTURE(name);
    CHECK_NOTHROW((void)make_family(FamilySpec{name, n, m, {}}));
  }
}
