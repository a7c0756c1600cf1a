#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include "supernil/catalog.hpp"
#include "supernil/errors.hpp"
#include "supernil/io.hpp"
#include "test_support.hpp"

using namespace supernil;

namespace {

bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  return a.even_dim() == b.even_dim() && a.odd_dim() == b.odd_dim() &&
         a.conductor() == b.conductor() && a.table() == b.table();
}

}  // namespace

TEST_CASE("algebra files round-trip through save and load") {
  const SuperAlgebra chain = make_family({"Thm21-even", 3, 0, {}});
  const std::string path = "io_roundtrip_tmp.json";
  save_algebra(chain, path);
  const SuperAlgebra back = load_algebra(path);
  std::remove(path.c_str());
  CHECK(same_algebra(chain, back));
}

TEST_CASE("json text round-trips every catalog family shape") {
  const std::vector<FamilySpec> specs = {
      {"Thm21-mixed", 3, 3, {}},
      {"Leib1m", 1, 4, {}},
      {"Leibn1", 4, 1, {{"alpha", Scalar::one(1)}}},
      {"Leib22-a", 2, 2, {}},
      {"Leib2m-b", 2, 5, {}},
      {"L", 5, 4, {{"a4", Scalar::from_rational(Rational::parse("-2/3"), 1)}}},
      {"G", 4, 3, {{"b4", Scalar::root_of_unity(1, 3, 3)}}},
      {"M", 4, 4, {{"theta", Scalar::integer(2, 1)}, {"tau", Scalar::integer(-1, 1)}}},
      {"H", 3, 3, {{"delta", Scalar::from_rational(Rational::parse("1/2"), 1)}}},
  };
  for (const auto& spec : specs) {
    const SuperAlgebra a = make_family(spec);
    const SuperAlgebra back = algebra_from_json(algebra_to_json(a));
    CHECK(same_algebra(a, back));
  }
}

TEST_CASE("serialization is deterministic and canonical") {
  const SuperAlgebra a = make_family({"M", 5, 5, {{"theta", Scalar::integer(3, 1)}}});
  const std::string text = algebra_to_json(a);
  CHECK(text == algebra_to_json(a));
  // Loading canonical text and re-serializing reproduces it byte for byte.
  CHECK(algebra_to_json(algebra_from_json(text)) == text);
}

TEST_CASE("unlisted products are zero") {
  const SuperAlgebra a = algebra_from_json(R"({
    "n": 2, "m": 1, "conductor": 1,
    "brackets": [
      {"left": "x1", "right": "x1", "value": [{"basis": "x2", "coeff": "1"}]}
    ]
  })");
  CHECK(a.basis_bracket({Parity::Even, 1}, {Parity::Even, 1}).even[1] ==
        Scalar::one(1));
  CHECK(a.basis_bracket({Parity::Even, 2}, {Parity::Even, 1}).is_zero());
  CHECK(a.basis_bracket({Parity::Odd, 1}, {Parity::Odd, 1}).is_zero());
  CHECK(a.table().size() == 1);
}

TEST_CASE("scalar literal grammar covers rationals and root expressions") {
  const SuperAlgebra a = algebra_from_json(R"({
    "n": 4, "m": 0, "conductor": 12,
    "brackets": [
      {"left": "x1", "right": "x1", "value": [
        {"basis": "x2", "coeff": "3/2"},
        {"basis": "x3", "coeff": "z^3"},
        {"basis": "x4", "coeff": "(1/2)*z^2 + 1"}
      ]}
    ]
  })");
  const GradedVector v = a.basis_bracket({Parity::Even, 1}, {Parity::Even, 1});
  CHECK(v.even[1] == Scalar::from_rational(Rational::parse("3/2"), 12));
  CHECK(v.even[2] == Scalar::root_of_unity(3, 12, 12));
  const Scalar half = Scalar::from_rational(Rational::parse("1/2"), 12);
  CHECK(v.even[3] == half * Scalar::root_of_unity(2, 12, 12) + Scalar::one(12));
}

TEST_CASE("malformed input is rejected with a named cause") {
  CHECK_THROWS_AS(algebra_from_json("not json"), ParseError);
  CHECK_THROWS_AS(algebra_from_json("[1,2]"), ParseError);
  CHECK_THROWS_AS(algebra_from_json(R"({"m":0,"conductor":1,"brackets":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":"3","m":0,"conductor":1,"brackets":[]})"), ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":3,"m":0,"conductor":0,"brackets":[]})"), ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":3,"m":0,"conductor":1,"bracket":[]})"), ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":3,"m":0,"conductor":1,"brackets":{}})"), ParseError);
  CHECK_THROWS_AS(load_algebra("no_such_file_here.json"), ParseError);

  // Value entries must name in-range basis vectors exactly once.
  CHECK_THROWS_WITH_AS(
      algebra_from_json(R"({"n":1,"m":2,"conductor":1,"brackets":[
        {"left":"x1","right":"y1","value":[{"basis":"y3","coeff":"1"}]}]})"),
      "basis y3 in [x1, y1] is outside the declared dimensions", ParseError);
  CHECK_THROWS_WITH_AS(
      algebra_from_json(R"({"n":2,"m":0,"conductor":1,"brackets":[
        {"left":"x1","right":"x1","value":[{"basis":"x2","coeff":"1"},
                                           {"basis":"x2","coeff":"2"}]}]})"),
      "basis x2 listed twice in [x1, x1]", ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":1,"m":0,"conductor":1,"brackets":[
        {"left":"z1","right":"x1","value":[]}]})"),
      ParseError);
}

TEST_CASE("table-level violations surface from the constructor, entry named") {
  // Bracket of two even elements landing in the odd block.
  CHECK_THROWS_WITH_AS(
      algebra_from_json(R"({"n":1,"m":1,"conductor":1,"brackets":[
        {"left":"x1","right":"x1","value":[{"basis":"y1","coeff":"1"}]}]})"),
      "bracket value of [x1, x1] has components of the wrong parity", DomainError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":2,"m":0,"conductor":1,"brackets":[
        {"left":"x1","right":"x1","value":[{"basis":"x2","coeff":"1"}]},
        {"left":"x1","right":"x1","value":[{"basis":"x2","coeff":"2"}]}]})"),
      DomainError);
}

TEST_CASE("bad scalar literals are parse errors") {
  CHECK_THROWS_WITH_AS(
      algebra_from_json(R"({"n":2,"m":0,"conductor":1,"brackets":[
        {"left":"x1","right":"x1","value":[{"basis":"x2","coeff":"1/0"}]}]})"),
      "scalar literal '1/0': zero denominator at offset 3", ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(R"({"n":2,"m":0,"conductor":1,"brackets":[
        {"left":"x1","right":"x1","value":[{"basis":"x2","coeff":"one"}]}]})"),
      ParseError);
}
