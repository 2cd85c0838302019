#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/grading.hpp"
#include "gapl/zoo.hpp"

using namespace gapl;

TEST_CASE("root decomposition of sl3") {
  AlgebraHandle h = make_algebra("sl3");
  RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
  CHECK(d.root_count() == 6);
  CHECK(d.zero().basis.size() == 2);
  CHECK(d.adapted);
  CHECK(d.dim() == 8);
  for (std::size_t c = 1; c < d.components.size(); ++c) {
    CHECK(d.components[c].basis.size() == 1);
    // negation symmetry of the root system
    Vec neg = scale(d.components[c].functional, -1);
    CHECK(d.is_root(neg));
  }
}

TEST_CASE("root counts of the classical and exceptional hosts") {
  struct Case {
    const char* id;
    std::size_t roots;
  };
  for (Case c : {Case{"sl4", 12}, {"so5", 8}, {"so7", 18}, {"sp6", 18}, {"so8", 24}, {"g2", 12}, {"f4", 48}}) {
    CAPTURE(c.id);
    AlgebraHandle h = make_algebra(c.id);
    RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
    CHECK(d.root_count() == c.roots);
    CHECK(d.zero().basis.size() == h.cartan.size());
  }
}

TEST_CASE("b_n grading") {
  auto L = make_bn(3);
  std::vector<Vec> cartan = {L->vec("z1"), L->vec("z2"), L->vec("z3")};
  RootDatum d = root_decomposition(*L, cartan);
  CHECK(d.root_count() == 2);
  CHECK(d.zero().basis.size() == 3);
  auto wx = d.weight_of(L->vec("x"));
  REQUIRE(wx);
  CHECK(*wx == Vec{2, -1, 0});
}

TEST_CASE("a non-toral subalgebra is rejected") {
  AlgebraHandle h = make_algebra("sl2");
  CHECK_THROWS_AS(root_decomposition(*h.algebra, {h.algebra->vec("e12")}), InvalidInput);
  CHECK_THROWS_AS(root_decomposition(*h.algebra, {h.algebra->vec("h1"), h.algebra->vec("e12")}), InvalidInput);
}

TEST_CASE("graded products") {
  AlgebraHandle h = make_algebra("sl2");
  RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
  CHECK(check_graded_product(h.algebra->table(), d));
  BilinearTable bad(3);
  bad.set(1, 1, Vec{1, 0, 0});  // e12 o e12 = h1 leaves the 2*alpha component
  CHECK_FALSE(check_graded_product(bad, d));
}

TEST_CASE("rational eigenspaces") {
  Matrix m = Matrix::from_rows({{2, 1}, {0, 3}}, 2);
  auto es = rational_eigenspaces(m);
  REQUIRE(es.size() == 2);
  for (const auto& e : es)
    for (const auto& v : e.basis) CHECK(m * v == scale(v, e.value));
  CHECK_THROWS(rational_eigenspaces(Matrix::from_rows({{0, 1}, {0, 0}}, 2)));
  CHECK_THROWS(rational_eigenspaces(Matrix::from_rows({{0, -1}, {1, 0}}, 2)));
}
