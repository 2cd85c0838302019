#include "doctest.h"
#include "gapl/apl.hpp"
#include "gapl/grading.hpp"
#include "gapl/zoo.hpp"
#include "support.hpp"

using namespace gapl;
using namespace gapl::test;

namespace {

void check_rho_hom(const AntiPreLieAlgebra& A) {
  LieAlgebra L = subadjacent_lie(A);
  auto rep = negative_left_mult_rep(A);
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Vec br = L.bracket(L.basis_vector(i), L.basis_vector(j));
      Matrix lhs(A.dim(), A.dim());
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (!br[k].is_zero()) lhs = lhs + br[k] * rep.rho[k];
      CHECK(lhs == commutator(rep.rho[i], rep.rho[j]));
    }
}

}  // namespace

TEST_CASE("the reference sl2 structure") {
  AntiPreLieAlgebra A = reference_sl2_structure();
  CHECK(validate_apl(A).ok());
  AlgebraHandle h = make_algebra("sl2");
  CHECK(check_compatibility(A, *h.algebra));
  CHECK(subadjacent_lie(A) == *h.algebra);
  RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
  CHECK(check_graded_product(A.product, d));
  check_rho_hom(A);
}

TEST_CASE("rho(h1) acts with spectrum 2, 0, -2") {
  AntiPreLieAlgebra A = reference_sl2_structure();
  SlTriple t{Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 0, 0}};
  auto rep = negative_left_mult_rep(A, t);
  REQUIRE(rep.sl2);
  auto w = weight_multiset(*rep.sl2);
  CHECK(w == std::vector<Rational>{2, 0, -2});
  auto d = decompose_rep(*rep.sl2);
  REQUIRE(d.summands.size() == 1);
  CHECK(d.summands[0].highest_weight == 2);
}

TEST_CASE("the zero product is anti-pre-Lie") {
  AntiPreLieAlgebra Z{{"a", "b"}, BilinearTable(2)};
  CHECK(validate_apl(Z).ok());
  check_rho_hom(Z);
}

TEST_CASE("single-entry mutations of the reference structure are rejected") {
  AntiPreLieAlgebra A = reference_sl2_structure();
  std::uniform_int_distribution<int> idx(0, 2);
  int rejected = 0;
  for (int trial = 0; trial < 20; ++trial) {
    AntiPreLieAlgebra B = A;
    std::size_t i = idx(rng()), j = idx(rng()), k = idx(rng());
    Vec v = to_dense(B.product.at(i, j), 3);
    v[k] += Rational(trial + 1, 3);
    B.product.set(i, j, v);
    if (!validate_apl(B).ok()) ++rejected;
  }
  CHECK(rejected == 20);
}

TEST_CASE("identity failures carry the triple and residual") {
  // a o b = a, all else zero. With x = a, y = z = b:
  // x o (y o z) - y o (x o z) = 0 - b o a = 0, while [y, x] o z = -a o b = -a
  AntiPreLieAlgebra A{{"a", "b"}, BilinearTable(2)};
  A.product.set(0, 1, Vec{1, 0});
  ValidationReport r = validate_apl(A);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.failures.front().axiom.empty());
}
