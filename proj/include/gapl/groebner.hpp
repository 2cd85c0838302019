#pragma once

#include <optional>
#include <vector>

#include "gapl/poly.hpp"

namespace gapl {

enum class MonomialOrder { DegRevLex, Lex };

struct OrderSpec {
  MonomialOrder kind = MonomialOrder::DegRevLex;
  std::vector<std::size_t> ranking;  // ranking[0] is the largest variable; empty = registry order
};

struct GroebnerBudget {
  std::size_t max_reductions = 20000;
  std::size_t max_basis = 4000;
};

// reads GAPL_GB_BUDGET when set
GroebnerBudget default_groebner_budget();

struct GroebnerBasis {
  std::vector<MultiPoly> generators;  // reduced, monic, sorted by decreasing leading term
  OrderSpec order;
  // when tracked: generators[k] = sum_i cofactors[k][i] * inputs[i]
  std::vector<MultiPoly> inputs;
  std::vector<std::vector<MultiPoly>> cofactors;
  bool tracked() const { return !cofactors.empty() || (generators.empty() && !inputs.empty()); }
  bool contains_one() const;
};

GroebnerBasis buchberger(const std::vector<MultiPoly>& polys, const OrderSpec& order = {},
                         const GroebnerBudget& budget = default_groebner_budget(),
                         bool track_cofactors = false);

struct Division {
  std::vector<MultiPoly> quotients;  // one per basis generator
  MultiPoly remainder;
};

Division divide(const MultiPoly& p, const GroebnerBasis& gb);
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);

// cofactors c_i with p = sum c_i * inputs[i]; needs a tracked basis
std::optional<std::vector<MultiPoly>> membership_cofactors(const MultiPoly& p, const GroebnerBasis& gb);

bool s_polynomials_reduce_to_zero(const GroebnerBasis& gb);
bool is_reduced(const GroebnerBasis& gb);

struct GroebnerWitness {
  std::vector<MultiPoly> generators;
  std::vector<MultiPoly> cofactors;  // sum cofactors[i] * generators[i] == 1
};

bool check_witness(const GroebnerWitness& w);
// nothing when the system is feasible or the budget ran out
std::optional<GroebnerWitness> prove_infeasible(const std::vector<MultiPoly>& polys,
                                                const GroebnerBudget& budget = default_groebner_budget());

// leading monomial comparison under an order
bool order_less(const Exponent& a, const Exponent& b, const OrderSpec& order);

}  // namespace gapl
