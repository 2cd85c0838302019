#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gapl/lie.hpp"
#include "gapl/sl2rep.hpp"

namespace gapl {

struct AntiPreLieAlgebra {
  std::vector<std::string> basis;
  BilinearTable product;

  std::size_t dim() const { return basis.size(); }
  Vec mult(const Vec& u, const Vec& v) const { return product.apply(u, v); }
  friend bool operator==(const AntiPreLieAlgebra& a, const AntiPreLieAlgebra& b) {
    return a.basis == b.basis && a.product == b.product;
  }
};

// x o (y o z) - y o (x o z) = [y, x] o z, and Jacobi for the commutator
ValidationReport validate_apl(const AntiPreLieAlgebra& A);

// commutator table, without validating A
LieAlgebra commutator_algebra(const AntiPreLieAlgebra& A);
LieAlgebra subadjacent_lie(const AntiPreLieAlgebra& A);
bool check_compatibility(const AntiPreLieAlgebra& A, const LieAlgebra& L);

struct SlTriple {
  Vec e, f, h;
};

struct NegativeLeftMultRep {
  std::vector<Matrix> rho;  // rho(b_i) = -L_{b_i}
  std::optional<Sl2Action> sl2;
};

NegativeLeftMultRep negative_left_mult_rep(const AntiPreLieAlgebra& A,
                                           const std::optional<SlTriple>& triple = std::nullopt);

// the structure on sl2 with basis (h1, e12, e21) from the reference table
AntiPreLieAlgebra reference_sl2_structure();

}  // namespace gapl
