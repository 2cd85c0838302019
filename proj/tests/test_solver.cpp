#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/solver.hpp"
#include "gapl/zoo.hpp"
#include "support.hpp"

using namespace gapl;
using namespace gapl::test;

namespace {

PolynomialSystem system_of(const VarsPtr& v, std::vector<MultiPoly> eqs) {
  PolynomialSystem s{v, std::move(eqs), {}};
  for (std::size_t i = 0; i < s.equations.size(); ++i) s.provenance.push_back("e" + std::to_string(i));
  return s;
}

// names the four sl2 unknowns after the parametrization h1 o e12 = alpha e12, ...
std::string sl2_name(const LieAlgebra& L, const Unknown& u) {
  const std::string a = L.label(u.i), b = L.label(u.j);
  if (a == "h1" && b == "e12") return "alpha";
  if (a == "h1" && b == "e21") return "beta";
  if (a == "e12" && b == "e21") return "gamma";
  if (a == "h1" && b == "h1") return "lambda";
  return "u_" + a + "_" + b;
}

bool contains_up_to_scalar(const std::vector<MultiPoly>& eqs, const MultiPoly& p) {
  for (const auto& e : eqs)
    if (e.monic() == p.monic()) return true;
  return false;
}

}  // namespace

TEST_CASE("sl2 template has four unknowns") {
  AlgebraHandle h = make_algebra("sl2");
  RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
  ProductTemplate t = build_template(h.algebra, d, {}, sl2_name);
  REQUIRE(t.vars->size() == 4);
  const LieAlgebra& L = *h.algebra;
  auto v = [&](const char* n) { return var(t.vars, n); };
  const std::size_t H = L.index("h1"), E = L.index("e12"), F = L.index("e21");
  // commutator elimination: e12 o h1 = (alpha - 2) e12, e21 o e12 = (gamma - 1) h1
  CHECK(t.entry(E, H)[E] == v("alpha") - cst(t.vars, 2));
  CHECK(t.entry(F, H)[F] == v("beta") + cst(t.vars, 2));
  CHECK(t.entry(F, E)[H] == v("gamma") - cst(t.vars, 1));
  CHECK(t.entry(E, E)[H].is_zero());
}

TEST_CASE("sl2 constraints contain the hand-expanded relations") {
  AlgebraHandle h = make_algebra("sl2");
  RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
  ProductTemplate t = build_template(h.algebra, d, {}, sl2_name);
  PolynomialSystem s = generate_constraints(t);
  CHECK(s.equations.size() == s.provenance.size());
  auto v = [&](const char* n) { return var(t.vars, n); };
  MultiPoly al = v("alpha"), ga = v("gamma"), la = v("lambda"), two = cst(t.vars, 2), one = cst(t.vars, 1);
  CHECK(contains_up_to_scalar(s.equations, (la - al) * (al - two) - 2 * (al - two)));
  CHECK(contains_up_to_scalar(s.equations, -((al - two) * (ga - one)) - al));
  for (const auto& e : s.equations) CHECK(e.degree() <= 2);
}

TEST_CASE("one-dimensional abelian algebra") {
  auto L = std::make_shared<LieAlgebra>(std::vector<std::string>{"h"});
  RootDatum d = root_decomposition(*L, {L->vec("h")});
  ProductTemplate t = build_template(L, d);
  CHECK(t.vars->size() == 1);
  CHECK(generate_constraints(t).equations.empty());
  GradedSolution sol = solve_graded(L, {L->vec("h")});
  CHECK(sol.outcome.kind == OutcomeKind::Family);
  REQUIRE(sol.outcome.branches.size() == 1);
  CHECK(sol.outcome.branches[0].free_vars.size() == 1);
}

TEST_CASE("restrictions outside the grading are rejected") {
  AlgebraHandle h = make_algebra("sl2");
  RootDatum d = root_decomposition(*h.algebra, h.cartan_vectors());
  const LieAlgebra& L = *h.algebra;
  Restrictions r{{{L.index("e12"), L.index("e12")}, {L.index("h1")}}};
  CHECK_THROWS_AS(build_template(h.algebra, d, r), InvalidInput);
}

TEST_CASE("forward substitution") {
  auto v = registry({"a", "b"});
  MultiPoly a = var(v, "a"), b = var(v, "b");
  SolveOutcome o = solve_system(system_of(v, {a - cst(v, 2), a * b - cst(v, 2)}));
  REQUIRE(o.kind == OutcomeKind::Unique);
  auto vals = o.values();
  CHECK(vals.at(0) == Rational(2));
  CHECK(vals.at(1) == Rational(1));
  CHECK(verify_certificate(o.certificate, o.branches).ok);
}

TEST_CASE("constant contradiction") {
  auto v = registry({"c"});
  MultiPoly c = var(v, "c");
  SolveOutcome o = solve_system(system_of(v, {c, c - cst(v, 1)}));
  CHECK(o.kind == OutcomeKind::Infeasible);
  CHECK(o.branches.empty());
  CertificateCheck cc = verify_certificate(o.certificate, o.branches);
  CHECK(cc.ok);
  CHECK(cc.contradictions == 1);
}

TEST_CASE("branching on a factorable equation") {
  auto v = registry({"a", "b"});
  MultiPoly a = var(v, "a"), b = var(v, "b");
  // (a - 1)(a + 1) = 0, b = a + 1
  SolveOutcome o = solve_system(system_of(v, {a * a - cst(v, 1), b - a - cst(v, 1)}));
  CHECK(o.kind == OutcomeKind::Family);
  CHECK(o.branches.size() == 2);
  for (const auto& br : o.branches) {
    CHECK(br.free_vars.empty());
    CHECK(check_branch_soundness(o.certificate.system, br));
  }
  CHECK(verify_certificate(o.certificate, o.branches).ok);
}

TEST_CASE("infeasibility that needs a Groebner witness") {
  auto v = registry({"x", "y"});
  MultiPoly x = var(v, "x"), y = var(v, "y");
  // x y = 1, x^2 + y^2 = 0, x^2 - y^2 = 1: forces 2 x^2 = 1 and 2 y^2 = -1, then x^2 y^2 = -1/4
  SolveOutcome o =
      solve_system(system_of(v, {x * y - cst(v, 1), x * x + y * y, x * x - y * y - cst(v, 1)}));
  CHECK(o.kind == OutcomeKind::Infeasible);
  CHECK(verify_certificate(o.certificate).ok);
}

TEST_CASE("tampered certificates are rejected") {
  auto v = registry({"a", "b"});
  MultiPoly a = var(v, "a"), b = var(v, "b");
  SolveOutcome o = solve_system(system_of(v, {a - cst(v, 2), a * b - cst(v, 2)}));
  REQUIRE(verify_certificate(o.certificate, o.branches).ok);

  Certificate c = o.certificate;
  c.system.equations[0] = a - cst(v, 3);
  CHECK_FALSE(verify_certificate(c, o.branches).ok);

  auto wrong = o.branches;
  wrong[0].assignment.at(1) = cst(v, 5);
  CHECK_FALSE(verify_certificate(o.certificate, wrong).ok);
  CHECK_FALSE(check_branch_soundness(o.certificate.system, wrong[0]));
}

TEST_CASE("a system vanishing at the origin stops with its residual") {
  auto v = registry({"a", "b"});
  MultiPoly a = var(v, "a"), b = var(v, "b");
  SolveOutcome o = solve_system(system_of(v, {a * b + b * b}));
  CHECK(o.kind == OutcomeKind::Family);
  REQUIRE(o.branches.size() == 1);
  CHECK(o.branches[0].residual.size() == 1);
  CHECK(check_branch_soundness(o.certificate.system, o.branches[0]));
  CHECK(verify_certificate(o.certificate, o.branches).ok);
}

TEST_CASE("one-variable equations split even at the origin") {
  auto v = registry({"a", "b"});
  MultiPoly a = var(v, "a"), b = var(v, "b");
  SolveOutcome o = solve_system(system_of(v, {a * a - a, b * b - b}));
  CHECK(o.kind == OutcomeKind::Family);
  CHECK(o.branches.size() == 4);
  for (const auto& br : o.branches) CHECK(br.free_vars.empty());
  CHECK(verify_certificate(o.certificate, o.branches).ok);
}

TEST_CASE("an irreducible quadratic is undecided") {
  auto v = registry({"a", "b"});
  MultiPoly a = var(v, "a"), b = var(v, "b");
  CHECK_THROWS_AS(solve_system(system_of(v, {a * a - cst(v, 2), b - a})), Undecided);
  // but a contradiction elsewhere still settles it
  SolveOutcome o = solve_system(system_of(v, {a * a - cst(v, 2), b - cst(v, 1), b - cst(v, 2)}));
  CHECK(o.kind == OutcomeKind::Infeasible);
}

TEST_CASE("step limits surface as undecided") {
  auto v = registry({"a", "b", "c"});
  MultiPoly a = var(v, "a"), b = var(v, "b"), c = var(v, "c");
  SolverLimits lim;
  lim.max_branches = 1;
  CHECK_THROWS_AS(solve_system(system_of(v, {a * a - cst(v, 1), b * b - cst(v, 1), c - a - b}), lim), Undecided);
}

TEST_CASE("sl2 has exactly the reference structure") {
  AlgebraHandle h = make_algebra("sl2");
  GradedSolution sol = solve_graded(h.algebra, h.cartan_vectors());
  REQUIRE(sol.outcome.kind == OutcomeKind::Unique);
  REQUIRE(sol.structures.size() == 1);
  CHECK(sol.structures[0] == reference_sl2_structure());
  CHECK(verify_certificate(sol.outcome.certificate, sol.outcome.branches).ok);
}
