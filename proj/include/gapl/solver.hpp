#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapl/apl.hpp"
#include "gapl/grading.hpp"
#include "gapl/groebner.hpp"
#include "gapl/poly.hpp"

namespace gapl {

// Allowed target basis indices for b_i o b_j, keyed by the ordered pair (i, j).
// Pairs not listed keep every target of the graded component.
using Restrictions = std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;

struct Unknown {
  std::size_t i, j, k;  // coefficient of b_k in b_i o b_j
};

struct ProductTemplate {
  std::shared_ptr<const LieAlgebra> algebra;
  RootDatum datum;
  VarsPtr vars;
  std::vector<Unknown> unknowns;  // indexed like vars
  // entries[i * dim + j][k]: coefficient of b_k in b_i o b_j
  std::vector<std::vector<MultiPoly>> entries;
  // coefficients pinned by restrictions to a constant, keyed by (i, j, k)
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> tied;

  std::size_t dim() const { return algebra->dim(); }
  const std::vector<MultiPoly>& entry(std::size_t i, std::size_t j) const { return entries[i * dim() + j]; }
  // product table after substituting a full assignment of constants
  BilinearTable realize(const std::map<std::size_t, Rational>& values) const;
};

using UnknownNamer = std::function<std::string(const LieAlgebra&, const Unknown&)>;

// datum must be adapted to the basis of L
ProductTemplate build_template(std::shared_ptr<const LieAlgebra> L, const RootDatum& datum,
                               const Restrictions& restrictions = {}, const UnknownNamer& namer = {});

struct PolynomialSystem {
  VarsPtr vars;
  std::vector<MultiPoly> equations;
  std::vector<std::string> provenance;
};

PolynomialSystem generate_constraints(const ProductTemplate& t);

// Derivation tree.  Replaying starts from the original equations; each node runs
// its steps on the current equation list and then ends in one of the terminal kinds.
struct SubstitutionEntry {
  std::size_t var;
  MultiPoly value;
  std::size_t from_eq;
};

struct Step {
  enum class Kind { Reduce, Substitute, Derive };
  Kind kind = Kind::Reduce;
  std::vector<MultiPoly> polys;                   // Reduce: new equation list, Derive: appended
  std::vector<std::vector<MultiPoly>> cofactors;  // Derive: polys[d] = sum cofactors[d][i] * eq_i
  std::vector<SubstitutionEntry> batch;           // Substitute: applied simultaneously
};

struct CertNode {
  enum class End { Branch, ConstantContradiction, GroebnerWitness, Leaf };
  std::vector<Step> steps;
  End end = End::Leaf;
  std::size_t eq = 0;                // Branch, ConstantContradiction
  std::size_t var = 0;               // Branch
  std::vector<MultiPoly> factors;    // Branch
  std::vector<CertNode> children;    // Branch, one per factor
  Rational value;                    // ConstantContradiction
  std::vector<MultiPoly> cofactors;  // GroebnerWitness
  std::size_t leaf = 0;              // Leaf: index into the outcome branches
};

struct Certificate {
  PolynomialSystem system;
  CertNode root;
};

struct SolutionBranch {
  std::map<std::size_t, MultiPoly> assignment;  // eliminated variable -> value in free variables
  std::vector<std::size_t> free_vars;
  // remaining constraints on the free variables; empty when every value works
  std::vector<MultiPoly> residual;
  friend bool operator==(const SolutionBranch&, const SolutionBranch&) = default;
};

enum class OutcomeKind { Unique, Family, Infeasible };
std::string outcome_name(OutcomeKind k);

struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::Infeasible;
  std::vector<SolutionBranch> branches;
  Certificate certificate;
  // constant values of a Unique outcome
  std::map<std::size_t, Rational> values() const;
};

struct SolverLimits {
  std::size_t max_branches = 64;
  std::size_t max_depth = 40;  // substitution rounds along one path
  GroebnerBudget groebner = default_groebner_budget();
};

// reads GAPL_MAX_BRANCHES / GAPL_MAX_STEPS when set
SolverLimits default_solver_limits();

SolveOutcome solve_system(const PolynomialSystem& s, const SolverLimits& limits = default_solver_limits());

struct CertificateCheck {
  bool ok = true;
  std::string error;
  std::size_t leaves = 0;
  std::size_t contradictions = 0;
};

// independent replay of every node of the tree
CertificateCheck verify_certificate(const Certificate& c, const std::vector<SolutionBranch>& branches = {});
// substituting each branch into every input equation leaves something in the span of its residual
bool check_branch_soundness(const PolynomialSystem& s, const SolutionBranch& b);

struct GradedSolution {
  ProductTemplate tmpl;
  PolynomialSystem system;
  SolveOutcome outcome;
  std::vector<AntiPreLieAlgebra> structures;  // one per branch without free variables
};

GradedSolution solve_graded(std::shared_ptr<const LieAlgebra> L, const std::vector<Vec>& cartan,
                            const Restrictions& restrictions = {},
                            const SolverLimits& limits = default_solver_limits());

}  // namespace gapl
