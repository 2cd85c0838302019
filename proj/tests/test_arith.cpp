#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/linalg.hpp"
#include "gapl/poly.hpp"
#include "support.hpp"

using namespace gapl;
using namespace gapl::test;

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-2, 5) * Rational(5, 2) == Rational(-1));
  CHECK(Rational::parse("-4/5") == Rational(-4, 5));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rationals survive values past machine width") {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  CHECK((big * Rational(7)).str() == "123456789012345678901234567890");
  CHECK((big - big).is_zero());
}

TEST_CASE("rational square roots") {
  Rational r;
  CHECK(rational_sqrt(Rational(9, 4), r));
  CHECK(r * r == Rational(9, 4));
  CHECK_FALSE(rational_sqrt(Rational(2), r));
  CHECK_FALSE(rational_sqrt(Rational(-1), r));
}

TEST_CASE("polynomial ring identities") {
  auto v = registry({"a", "b", "c"});
  MultiPoly a = var(v, "a"), b = var(v, "b"), c = var(v, "c");
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK(((a + b).pow(3)) == a.pow(3) + 3 * a * a * b + 3 * a * b * b + b.pow(3));
  CHECK((a * b - b * a).is_zero());
  MultiPoly p = a * a * c + b;
  CHECK(p.degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.substitute(0, cst(v, 2)) == 4 * c + b);
  CHECK(p.evaluate({{0, Rational(1)}, {1, Rational(2)}, {2, Rational(3)}}) == Rational(5));
}

TEST_CASE("exact division and square roots of polynomials") {
  auto v = registry({"x", "y"});
  MultiPoly x = var(v, "x"), y = var(v, "y");
  auto q = exact_divide(x * x - y * y, x - y);
  REQUIRE(q);
  CHECK(*q == x + y);
  CHECK_FALSE(exact_divide(x * x + y, x - y));
  auto r = poly_sqrt((x + 2 * y).pow(2));
  REQUIRE(r);
  CHECK(r->pow(2) == (x + 2 * y).pow(2));
}

TEST_CASE("univariate factoring splits rational roots only") {
  auto v = registry({"t", "s"});
  MultiPoly t = var(v, "t"), s = var(v, "s");
  Factorization f = factor_univariate_in(2 * t * t - 2 * s * s, 0);
  REQUIRE(f.factors.size() == 2);
  MultiPoly prod = cst(v, f.unit);
  for (const auto& g : f.factors) prod = prod * g;
  CHECK(prod == 2 * t * t - 2 * s * s);
  CHECK(factor_univariate_in(t * t + cst(v, 1), 0).irreducible);
}

TEST_CASE("linear algebra over Q") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(m * ker[0]));
  auto x = solve(m, Vec{6, 12, 2});
  REQUIRE(x);
  CHECK(m * *x == Vec{6, 12, 2});
  CHECK_FALSE(solve(m, Vec{1, 0, 0}));
  Matrix a = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(m));
}

TEST_CASE("random products against their inverses") {
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = small_rational();
    auto inv = inverse(a);
    if (!inv) {
      CHECK(rank(a) < 4);
      continue;
    }
    CHECK(*inv * a == Matrix::identity(4));
  }
}
