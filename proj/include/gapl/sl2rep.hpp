#pragma once

#include <vector>

#include "gapl/linalg.hpp"

namespace gapl {

// actions of e12, e21, h1
struct Sl2Action {
  std::size_t dim = 0;
  Matrix E, F, H;
};

struct Summand {
  int highest_weight = 0;
  std::size_t multiplicity = 0;
  std::vector<Vec> highest_weight_vectors;
};

struct RepDecomposition {
  std::vector<Summand> summands;  // by decreasing highest weight
};

// list of violated relations; empty when the action is a representation
std::vector<std::string> sl2_relation_failures(const Sl2Action& a);
Sl2Action make_standard_irrep(int m);
Sl2Action direct_sum(const Sl2Action& a, const Sl2Action& b);
RepDecomposition decompose_rep(const Sl2Action& a);
// eigenvalues of H with multiplicity, in decreasing order
std::vector<Rational> weight_multiset(const Sl2Action& a);

}  // namespace gapl
