#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "supernil/errors.hpp"
#include "supernil/graded.hpp"
#include "supernil/linalg.hpp"
#include "supernil/subspace.hpp"
#include "supernil/superalgebra.hpp"
#include "test_support.hpp"

using namespace supernil;
using namespace testsupport;

TEST_CASE("basis names parse and print") {
  CHECK(parse_basis_name("x3") == BasisIndex{Parity::Even, 3});
  CHECK(parse_basis_name("y12") == BasisIndex{Parity::Odd, 12});
  CHECK(BasisIndex{Parity::Even, 3}.name() == "x3");
  CHECK(BasisIndex{Parity::Odd, 1}.name() == "y1");
  CHECK_THROWS_AS(parse_basis_name("z1"), ParseError);
  CHECK_THROWS_AS(parse_basis_name("x"), ParseError);
  CHECK_THROWS_AS(parse_basis_name("x0"), ParseError);
  CHECK_THROWS_AS(parse_basis_name("x1a"), ParseError);
  CHECK_THROWS_AS(parse_basis_name(""), ParseError);
}

TEST_CASE("graded vectors: units, arithmetic, printing") {
  GradedVector v = GradedVector::unit(2, 2, 1, {Parity::Even, 1});
  GradedVector w = GradedVector::unit(2, 2, 1, {Parity::Odd, 2});
  w.scale(Scalar::from_rational(Rational(1, 2), 1));
  GradedVector s = v + w;
  CHECK(s.str() == "x1 + (1/2)*y2");
  CHECK((s - s).is_zero());
  CHECK(GradedVector(2, 2, 1).str() == "0");
  CHECK(v.is_homogeneous(Parity::Even));
  CHECK_FALSE(s.is_homogeneous(Parity::Even));
  CHECK_FALSE(s.is_homogeneous(Parity::Odd));
  CHECK(GradedVector(2, 2, 1).is_homogeneous(Parity::Even));
  CHECK(GradedVector(2, 2, 1).is_homogeneous(Parity::Odd));

  GradedVector neg = v;
  neg.scale(Scalar::integer(-1, 1));
  CHECK(neg.str() == "-x1");
  CHECK((neg + v).is_zero());

  std::vector<Scalar> row = s.concat();
  CHECK(row.size() == 4);
  CHECK(GradedVector::split(row, 2, 2) == s);
  CHECK_THROWS_AS(GradedVector::split(row, 3, 2), MismatchError);
  CHECK_THROWS_AS(GradedVector::unit(2, 2, 1, {Parity::Even, 3}), DomainError);
}

TEST_CASE("rref is canonical under row-space-preserving changes") {
  std::mt19937 rng(2301);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::vector<Scalar>> rows;
    for (int i = 0; i < 4; ++i) {
      std::vector<Scalar> row;
      for (int j = 0; j < 6; ++j) row.push_back(random_rational_scalar(rng, 1));
      rows.push_back(std::move(row));
    }
    auto reference = rows;
    rref_in_place(reference);

    // Shuffle, rescale, and add multiples of other rows: same row space.
    auto mutated = rows;
    std::shuffle(mutated.begin(), mutated.end(), rng);
    for (std::size_t i = 0; i < mutated.size(); ++i) {
      Scalar c = Scalar::integer(std::uniform_int_distribution<long>(1, 5)(rng), 1);
      for (auto& x : mutated[i]) x *= c;
      std::size_t other = (i + 1) % mutated.size();
      for (std::size_t j = 0; j < mutated[i].size(); ++j) {
        mutated[i][j] += mutated[other][j];
      }
    }
    rref_in_place(mutated);
    CHECK(mutated == reference);

    // rref is idempotent.
    auto again = reference;
    rref_in_place(again);
    CHECK(again == reference);
  }
}

TEST_CASE("kernel basis solves the system and fills the rank gap") {
  std::mt19937 rng(907);
  for (unsigned conductor : {1u, 4u}) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = random_matrix(rng, 3, 5, conductor);
      auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.size() == 5);
      for (const auto& v : ker) {
        for (const auto& c : m.apply(v)) CHECK(c.is_zero());
      }
      auto echelon = ker;
      rref_in_place(echelon);
      CHECK(echelon == ker);
    }
  }
}

TEST_CASE("inverse round-trips and rejects singular input") {
  std::mt19937 rng(411);
  int invertible_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Matrix m = random_matrix(rng, 4, 4, 1);
    if (rank(m) < 4) continue;
    ++invertible_seen;
    Matrix inv = inverse(m);
    CHECK(m * inv == Matrix::identity(4, 1));
    CHECK(inv * m == Matrix::identity(4, 1));
  }
  CHECK(invertible_seen > 0);

  Matrix singular(2, 2, 1);
  singular.at(0, 0) = Scalar::one(1);
  singular.at(1, 0) = Scalar::one(1);
  CHECK_THROWS_AS(inverse(singular), DomainError);
  CHECK_THROWS_AS(inverse(Matrix(2, 3, 1)), DomainError);
}

TEST_CASE("subspaces are canonical and order-independent") {
  GradedVector a = GradedVector::unit(3, 1, 1, {Parity::Even, 1});
  GradedVector b = GradedVector::unit(3, 1, 1, {Parity::Even, 2});
  GradedVector c = a + b;

  Subspace u = Subspace::span(3, 1, 1, {a, b});
  Subspace v = Subspace::span(3, 1, 1, {c, b, a});
  CHECK(u == v);
  CHECK(u.dim() == 2);
  CHECK(u.contains(c));
  CHECK_FALSE(u.contains(GradedVector::unit(3, 1, 1, {Parity::Odd, 1})));
  CHECK(u.contains(GradedVector(3, 1, 1)));

  CHECK(Subspace::whole(3, 1, 1).dim() == 4);
  CHECK(Subspace(3, 1, 1).is_zero());
  CHECK(Subspace::span(3, 1, 1, {}).is_zero());
  CHECK(Subspace::whole(3, 1, 1).contains(u));
  CHECK_FALSE(u.contains(Subspace::whole(3, 1, 1)));

  CHECK_THROWS_AS(u == Subspace(2, 2, 1), MismatchError);
  CHECK_THROWS_AS(Subspace::span(3, 1, 1, {GradedVector(2, 1, 1)}), MismatchError);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(5507);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GradedVector> ugen, vgen;
    std::uniform_int_distribution<int> count(1, 3);
    for (int i = count(rng); i > 0; --i) ugen.push_back(random_vector(rng, 3, 2, 1));
    for (int i = count(rng); i > 0; --i) vgen.push_back(random_vector(rng, 3, 2, 1));
    Subspace u = Subspace::span(3, 2, 1, ugen);
    Subspace v = Subspace::span(3, 2, 1, vgen);
    Subspace s = u.sum(v);
    Subspace i = u.intersect(v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(v));
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(u.sum(u) == u);
    CHECK(u.intersect(u) == u);
  }
}

TEST_CASE("construction rejects malformed tables") {
  SuperAlgebra shape(2, 2, 1, {});

  // Value parity must match the product grading.
  std::vector<BracketEntry> bad = {entry(shape, "x1", "y1", "x2")};
  CHECK_THROWS_WITH_AS(SuperAlgebra(2, 2, 1, bad),
                       "bracket value of [x1, y1] has components of the wrong parity",
                       DomainError);

  bad = {entry(shape, "x1", "x2", "y1")};
  CHECK_THROWS_AS(SuperAlgebra(2, 2, 1, bad), DomainError);
  bad = {entry(shape, "y1", "y2", "y1")};
  CHECK_THROWS_AS(SuperAlgebra(2, 2, 1, bad), DomainError);

  bad = {entry(shape, "x1", "x3", "x2")};
  CHECK_THROWS_AS(SuperAlgebra(2, 2, 1, bad), DomainError);

  bad = {entry(shape, "x1", "x2", "x1"), entry(shape, "x1", "x2", "x2")};
  CHECK_THROWS_AS(SuperAlgebra(2, 2, 1, bad), DomainError);

  // Mismatched scalar conductor inside a value.
  GradedVector wrong(2, 2, 4);
  wrong.even[0] = Scalar::one(4);
  CHECK_THROWS_AS(
      SuperAlgebra(2, 2, 1,
                   {{BasisIndex{Parity::Even, 1}, BasisIndex{Parity::Even, 2}, wrong}}),
      MismatchError);

  // Zero values are legal and simply dropped.
  std::vector<BracketEntry> zero_entry = {
      {BasisIndex{Parity::Even, 1}, BasisIndex{Parity::Even, 2}, GradedVector(2, 2, 1)}};
  CHECK(SuperAlgebra(2, 2, 1, zero_entry).table().empty());
}

TEST_CASE("bracket is the bilinear extension of the table") {
  SuperAlgebra chain = alternating_chain(2, 3);

  BasisIndex y1{Parity::Odd, 1}, x1{Parity::Even, 1}, y2{Parity::Odd, 2};
  GradedVector two_y2 = GradedVector::unit(2, 3, 1, y2);
  two_y2.scale(Scalar::integer(2, 1));
  CHECK(chain.basis_bracket(y1, x1) == two_y2);
  CHECK(chain.basis_bracket(x1, y1) == GradedVector::unit(2, 3, 1, y2));
  CHECK(chain.basis_bracket(y2, y2).is_zero());

  std::mt19937 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    GradedVector u = random_vector(rng, 2, 3, 1);
    GradedVector v = random_vector(rng, 2, 3, 1);
    GradedVector w = random_vector(rng, 2, 3, 1);
    Scalar c = random_rational_scalar(rng, 1);

    CHECK(chain.bracket(u + v, w) == chain.bracket(u, w) + chain.bracket(v, w));
    CHECK(chain.bracket(u, v + w) == chain.bracket(u, v) + chain.bracket(u, w));
    GradedVector scaled = u;
    scaled.scale(c);
    GradedVector expect = chain.bracket(u, v);
    expect.scale(c);
    CHECK(chain.bracket(scaled, v) == expect);
  }

  CHECK_THROWS_AS(chain.bracket(GradedVector(1, 3, 1), GradedVector(2, 3, 1)),
                  MismatchError);
}

TEST_CASE("defining identity holds on the model algebras") {
  CHECK(null_filiform(4).check_superidentity().empty());
  CHECK(alternating_chain(2, 2).check_superidentity().empty());
  CHECK(alternating_chain(2, 3).check_superidentity().empty());
  CHECK(alternating_chain(3, 4).check_superidentity().empty());
}

TEST_CASE("defining identity failures are reported with their witness") {
  // [x1,x1] = x2 alone closes; adding [x1,x2] = x3 breaks associativity of
  // the chain at (x1, x1, x1).
  SuperAlgebra shape(3, 0, 1, {});
  SuperAlgebra good(3, 0, 1, {entry(shape, "x1", "x1", "x2")});
  CHECK(good.check_superidentity().empty());

  SuperAlgebra bad(3, 0, 1,
                   {entry(shape, "x1", "x1", "x2"), entry(shape, "x1", "x2", "x3")});
  auto violations = bad.check_superidentity();
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& v : violations) {
    if (v.x == BasisIndex{Parity::Even, 1} && v.y == BasisIndex{Parity::Even, 1} &&
        v.z == BasisIndex{Parity::Even, 1}) {
      found = true;
      CHECK(v.residual == GradedVector::unit(3, 0, 1, {Parity::Even, 3}));
    }
  }
  CHECK(found);
}

TEST_CASE("graded antisymmetry test separates the two kinds of table") {
  CHECK_FALSE(null_filiform(4).is_lie());

  // Squaring an odd element is compatible with graded antisymmetry.
  SuperAlgebra shape(1, 2, 1, {});
  SuperAlgebra square(1, 2, 1, {entry(shape, "y1", "y1", "x1")});
  CHECK(square.check_superidentity().empty());
  CHECK(square.is_lie());

  // An asymmetric odd-odd product is not.
  SuperAlgebra lopsided(1, 2, 1, {entry(shape, "y1", "y2", "x1")});
  CHECK_FALSE(lopsided.is_lie());
}

TEST_CASE("right annihilator of the model chain drops the generator") {
  SuperAlgebra nf = null_filiform(4);
  Subspace ann = nf.right_annihilator();
  CHECK(ann.dim() == 3);
  CHECK_FALSE(ann.contains(GradedVector::unit(4, 0, 1, {Parity::Even, 1})));
  for (unsigned i = 2; i <= 4; ++i) {
    CHECK(ann.contains(GradedVector::unit(4, 0, 1, {Parity::Even, i})));
  }

  // Definition check on a mixed algebra: every [u, z] with z in the
  // annihilator vanishes, and adjoining the generator breaks it.
  SuperAlgebra chain = alternating_chain(2, 3);
  Subspace cann = chain.right_annihilator();
  for (BasisIndex u : chain.basis_order()) {
    for (const auto& z : cann.basis()) {
      CHECK(chain.bracket(chain.basis_vector(u), z).is_zero());
    }
  }
  CHECK_FALSE(cann.contains(chain.basis_vector({Parity::Odd, 1})));
}

TEST_CASE("product span matches the power chain of the model algebra") {
  SuperAlgebra nf = null_filiform(4);
  Subspace whole = nf.whole_space();
  Subspace sq = product_span(nf, whole, whole);
  CHECK(sq.dim() == 3);
  CHECK_FALSE(sq.contains(GradedVector::unit(4, 0, 1, {Parity::Even, 1})));
  Subspace cube = product_span(nf, sq, whole);
  CHECK(cube.dim() == 2);
  Subspace fourth = product_span(nf, cube, whole);
  CHECK(fourth.dim() == 1);
  CHECK(product_span(nf, fourth, whole).is_zero());
}

TEST_CASE("even and odd coordinate subspaces") {
  SuperAlgebra chain = alternating_chain(2, 3);
  CHECK(chain.even_space().dim() == 2);
  CHECK(chain.odd_space().dim() == 3);
  CHECK(chain.even_space().intersect(chain.odd_space()).is_zero());
  CHECK(chain.even_space().sum(chain.odd_space()) == chain.whole_space());
}

TEST_CASE("even part restricts the table") {
  SuperAlgebra chain = alternating_chain(2, 2);
  SuperAlgebra even = chain.even_part();
  CHECK(even.even_dim() == 2);
  CHECK(even.odd_dim() == 0);
  // Only [x1, x1] = 2 x2 survives from the even block.
  GradedVector two_x2 = GradedVector::unit(2, 0, 1, {Parity::Even, 2});
  two_x2.scale(Scalar::integer(2, 1));
  CHECK(even.basis_bracket({Parity::Even, 1}, {Parity::Even, 1}) == two_x2);
  CHECK(even.table().size() == 1);
  CHECK(even.check_superidentity().empty());
}

TEST_CASE("right multiplication operators act blockwise") {
  SuperAlgebra chain = alternating_chain(2, 3);
  GradedVector x1 = chain.basis_vector({Parity::Even, 1});

  Matrix on_odd = chain.right_multiplication_on(Parity::Odd, x1);
  // [y_j, x1] = 2 y_{j+1} for j = 1, 2 and zero for j = 3.
  Matrix expect(3, 3, 1);
  expect.at(1, 0) = Scalar::integer(2, 1);
  expect.at(2, 1) = Scalar::integer(2, 1);
  CHECK(on_odd == expect);

  Matrix on_even = chain.right_multiplication_on(Parity::Even, x1);
  Matrix expect_even(2, 2, 1);
  expect_even.at(1, 0) = Scalar::integer(2, 1);
  CHECK(on_even == expect_even);

  CHECK_THROWS_AS(chain.right_multiplication_on(Parity::Even,
                                               chain.basis_vector({Parity::Odd, 1})),
                  DomainError);
}

TEST_CASE("basis change transports the bracket faithfully") {
  SuperAlgebra chain = alternating_chain(2, 3);
  std::mt19937 rng(6211);

  for (int trial = 0; trial < 6; ++trial) {
    Matrix pe(2, 2, 1), po(3, 3, 1);
    do {
      pe = random_matrix(rng, 2, 2, 1);
    } while (rank(pe) < 2);
    do {
      po = random_matrix(rng, 3, 3, 1);
    } while (rank(po) < 3);

    SuperAlgebra moved = chain.change_basis(pe, po);
    CHECK(moved.check_superidentity().empty());
    CHECK(moved.right_annihilator().dim() == chain.right_annihilator().dim());

    // Independent check: the new table read back through the column vectors
    // must match the original bracket computed directly.
    auto old_coords = [&](const GradedVector& w) {
      GradedVector v(2, 3, 1);
      v.even = pe.apply(w.even);
      v.odd = po.apply(w.odd);
      return v;
    };
    for (BasisIndex a : moved.basis_order()) {
      for (BasisIndex b : moved.basis_order()) {
        GradedVector lhs = old_coords(moved.basis_bracket(a, b));
        GradedVector rhs = chain.bracket(old_coords(moved.basis_vector(a)),
                                         old_coords(moved.basis_vector(b)));
        CHECK(lhs == rhs);
      }
    }
  }

  CHECK_THROWS_AS(chain.change_basis(Matrix(2, 2, 1), Matrix(3, 3, 1)), DomainError);
  CHECK_THROWS_AS(chain.change_basis(Matrix::identity(3, 1), Matrix::identity(3, 1)),
                  MismatchError);
}
