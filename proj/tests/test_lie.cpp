#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/zoo.hpp"
#include "oracles.hpp"

using namespace gapl;
using namespace gapl::test;


TEST_CASE("sl2 brackets") {
  AlgebraHandle h = make_algebra("sl2");
  const LieAlgebra& L = *h.algebra;
  REQUIRE(L.dim() == 3);
  CHECK(L.bracket(L.vec("h1"), L.vec("e12")) == scale(L.vec("e12"), 2));
  CHECK(L.bracket(L.vec("h1"), L.vec("e21")) == scale(L.vec("e21"), -2));
  CHECK(L.bracket(L.vec("e12"), L.vec("e21")) == L.vec("h1"));
  CHECK(validate_lie(L).ok());
}

TEST_CASE("classical algebras have the right dimensions and satisfy the axioms") {
  struct Case {
    const char* id;
    std::size_t dim;
  };
  for (Case c : {Case{"sl3", 8}, {"sl4", 15}, {"sl5", 24}, {"so5", 10}, {"so7", 21}, {"so9", 36}, {"sp6", 21},
                 {"so8", 28}}) {
    CAPTURE(c.id);
    AlgebraHandle h = make_algebra(c.id);
    CHECK(h.algebra->dim() == c.dim);
    CHECK(validate_lie(*h.algebra).ok());
  }
}

TEST_CASE("so5 is the full solution space of its defining form") {
  ClassicalAlgebra c = make_classical('B', 2);
  const std::size_t n = c.form.rows();
  REQUIRE(n == 5);
  // X -> X^T J + J X on all n x n matrices, one column per matrix unit
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix x(n, n);
      x(i, j) = 1;
      Matrix y = x.transpose() * c.form + c.form * x;
      cols.push_back(y.data());
    }
  CHECK(kernel(Matrix::from_cols(cols, n * n)).size() == c.algebra->dim());
  for (const auto& m : c.realization.basis()) CHECK((m.transpose() * c.form + c.form * m).is_zero());
}

TEST_CASE("quoted o(5) elements lie in the realization and bracket as stated") {
  ClassicalAlgebra c = make_classical('B', 2);
  const MatrixRealization& R = c.realization;
  Matrix x = 2 * R.unit(1, 0) - R.unit(0, 3);
  Matrix y = 2 * R.unit(2, 0) - R.unit(0, 4);
  CHECK(R.contains(x));
  CHECK(R.contains(y));
  CHECK(commutator(x, y) == 2 * (R.unit(2, 3) - R.unit(1, 4)));
  // the abstract bracket agrees with the matrix commutator
  CHECK(c.algebra->bracket(R.coords(x), R.coords(y)) == R.coords(commutator(x, y)));
}

TEST_CASE("Cartan matrix algebras: axioms and root counts") {
  struct Case {
    char type;
    int n;
  };
  for (Case c : {Case{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4}, {'C', 3}, {'D', 4},
                 {'G', 2}, {'F', 4}, {'E', 6}}) {
    CAPTURE(c.type);
    CAPTURE(c.n);
    CartanMatrix cm = cartan_matrix(c.type, c.n);
    ChevalleyData d = make_from_cartan_matrix(cm);
    const std::size_t roots = orbit_root_count(cm);
    CHECK(roots == expected_root_count(c.type, c.n));
    CHECK(d.roots.size() == roots);
    CHECK(d.algebra->dim() == roots + cm.rank());
    CHECK(validate_lie(*d.algebra).ok());
  }
}

TEST_CASE("G2 has 12 roots and dimension 14") {
  ChevalleyData d = make_from_cartan_matrix(cartan_matrix('G', 2));
  CHECK(d.roots.size() == 12);
  CHECK(d.algebra->dim() == 14);
}

TEST_CASE("E7 and E8 root systems") {
  CHECK(positive_roots(cartan_matrix('E', 7)).size() == 63);
  CHECK(positive_roots(cartan_matrix('E', 8)).size() == 120);
  CHECK(orbit_root_count(cartan_matrix('E', 7)) == 126);
}

TEST_CASE("malformed Cartan matrices are rejected") {
  CHECK_THROWS_AS(check_cartan_matrix(CartanMatrix{{{2, -1}, {0, 2}}}), InvalidInput);
  CHECK_THROWS_AS(check_cartan_matrix(CartanMatrix{{{2, 1}, {1, 2}}}), InvalidInput);
  CHECK_THROWS(make_algebra("sl1"));
  CHECK_THROWS(make_algebra("so6"));
  CHECK_THROWS(make_algebra("sp4x"));
  CHECK_THROWS(make_algebra("e9"));
}

TEST_CASE("a broken bracket fails Jacobi at the expected triple") {
  // [a,b] = a, [a,c] = b, [b,c] = 0:
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 + [b,-b] + [c,a] = -b
  LieAlgebra L({"a", "b", "c"});
  L.set_bracket(0, 1, Vec{1, 0, 0});
  L.set_bracket(0, 2, Vec{0, 1, 0});
  ValidationReport r = validate_lie(L);
  REQUIRE_FALSE(r.ok());
  const Vec& res = r.failures.front().residual;
  CHECK((res == Vec{0, -1, 0} || res == Vec{0, 1, 0}));
  CHECK_THROWS_AS(L.set_bracket(1, 1, Vec{1, 0, 0}), InvalidInput);
}

TEST_CASE("b_n has the expected brackets") {
  for (int n = 2; n <= 5; ++n) {
    auto L = make_bn(n);
    CHECK(L->dim() == static_cast<std::size_t>(n + 2));
    CHECK(validate_lie(*L).ok());
    CHECK(L->bracket(L->vec("x"), L->vec("y")) == L->vec("z1"));
    CHECK(L->bracket(L->vec("z2"), L->vec("x")) == scale(L->vec("x"), -1));
    if (n > 2) CHECK(is_zero(L->bracket(L->vec("z3"), L->vec("x"))));
  }
}

TEST_CASE("isomorphism checks reject a wrong map") {
  auto L = make_algebra("sl2").algebra;
  LinMap id{L, L, Matrix::identity(3)};
  CHECK(check_iso(id));
  Matrix m = Matrix::identity(3);
  m(0, 0) = 2;
  CHECK_FALSE(check_morphism(LinMap{L, L, m}));
}

TEST_CASE("subalgebra closure of two root vectors of sl3") {
  AlgebraHandle h = make_algebra("sl3");
  const LieAlgebra& L = *h.algebra;
  Subalgebra s = subalgebra_closure(h.algebra, {L.vec("e12"), L.vec("e21")});
  CHECK(s.basis.size() == 3);
  CHECK(validate_lie(*s.algebra).ok());
  CHECK(check_morphism(s.inclusion));
}
