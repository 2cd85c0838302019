#include <algorithm>
#include <set>

#include "gapl/errors.hpp"
#include "gapl/solver.hpp"
#include "span.hpp"

namespace gapl {

namespace {

struct Failure {
  std::string what;
};

[[noreturn]] void fail(const std::string& what) { throw Failure{what}; }

MultiPoly combine(const std::vector<MultiPoly>& cofactors, const std::vector<MultiPoly>& eqs, const VarsPtr& vars) {
  if (cofactors.size() != eqs.size()) fail("cofactor count does not match the equation count");
  MultiPoly s(vars);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (!cofactors[i].is_zero()) s += cofactors[i] * eqs[i];
  return s;
}

bool has_common_zero(const std::vector<MultiPoly>& eqs) {
  if (std::none_of(eqs.begin(), eqs.end(), [](const MultiPoly& e) { return e.has_constant_term(); })) return true;
  return !buchberger(eqs).contains_one();
}

class Replay {
 public:
  Replay(const Certificate& c, const std::vector<SolutionBranch>& branches)
      : vars_(c.system.vars), branches_(branches) {}

  CertificateCheck result;

  void node(const CertNode& n, std::vector<MultiPoly> state, std::map<std::size_t, MultiPoly> sigma) {
    for (const auto& st : n.steps) step(st, state, sigma);
    switch (n.end) {
      case CertNode::End::ConstantContradiction: {
        if (n.eq >= state.size()) fail("contradiction names a missing equation");
        if (!state[n.eq].is_constant() || state[n.eq].constant_term() != n.value || n.value.is_zero())
          fail("equation " + std::to_string(n.eq) + " is not the nonzero constant " + n.value.str());
        ++result.contradictions;
        return;
      }
      case CertNode::End::GroebnerWitness: {
        if (combine(n.cofactors, state, vars_) != MultiPoly(vars_, Rational(1)))
          fail("witness cofactors do not combine to 1");
        ++result.contradictions;
        return;
      }
      case CertNode::End::Branch: {
        if (n.eq >= state.size()) fail("branch names a missing equation");
        if (n.factors.empty() || n.factors.size() != n.children.size()) fail("branch factors and children differ");
        MultiPoly rest = state[n.eq];
        for (const auto& f : n.factors) {
          if (f.is_constant()) fail("constant branch factor");
          auto q = exact_divide(rest, f);
          if (!q) fail("branch factor " + f.str() + " does not divide " + state[n.eq].str());
          rest = *q;
          while (auto again = exact_divide(rest, f)) {
            if (again->is_zero()) break;
            rest = *again;
          }
        }
        if (!rest.is_constant() || rest.is_zero()) fail("branch factors do not cover " + state[n.eq].str());
        for (std::size_t c = 0; c < n.children.size(); ++c) {
          auto child = state;
          child.push_back(n.factors[c]);
          node(n.children[c], std::move(child), sigma);
        }
        return;
      }
      case CertNode::End::Leaf: {
        ++result.leaves;
        if (branches_.empty()) return;
        if (n.leaf >= branches_.size()) fail("leaf index out of range");
        const SolutionBranch& b = branches_[n.leaf];
        if (b.assignment != sigma) fail("leaf assignment differs from the replayed substitutions");
        if (b.residual != state) fail("leaf residual differs from the replayed equations");
        for (std::size_t v : b.free_vars)
          if (sigma.count(v)) fail("free variable " + vars_->name(v) + " was eliminated");
        if (b.free_vars.size() + sigma.size() != vars_->size()) fail("free variables incomplete");
        if (!has_common_zero(state)) fail("leaf residual has no common zero");
        return;
      }
    }
  }

 private:
  void step(const Step& st, std::vector<MultiPoly>& state, std::map<std::size_t, MultiPoly>& sigma) {
    switch (st.kind) {
      case Step::Kind::Reduce:
        if (!detail::same_span(vars_, state, st.polys)) fail("reduce step changes the span");
        state = st.polys;
        return;
      case Step::Kind::Derive:
        if (st.cofactors.size() != st.polys.size()) fail("derive step without cofactors");
        for (std::size_t d = 0; d < st.polys.size(); ++d)
          if (combine(st.cofactors[d], state, vars_) != st.polys[d]) fail("derived polynomial is not the stated combination");
        state.insert(state.end(), st.polys.begin(), st.polys.end());
        return;
      case Step::Kind::Substitute: {
        std::map<std::size_t, MultiPoly> batch;
        for (const auto& s : st.batch) {
          if (s.from_eq >= state.size()) fail("substitution names a missing equation");
          if (!batch.emplace(s.var, s.value).second) fail("variable substituted twice in one batch");
          const MultiPoly& e = state[s.from_eq];
          const MultiPoly x = MultiPoly::variable(vars_, s.var);
          MultiPoly lead = e.coefficient_of(s.var, 1);
          if (e.degree_in(s.var) != 1 || !lead.is_constant() || lead.is_zero())
            fail("equation " + std::to_string(s.from_eq) + " is not linear in " + vars_->name(s.var));
          if (e != lead.constant_term() * (x - s.value))
            fail("substituted value does not solve equation " + std::to_string(s.from_eq));
        }
        for (const auto& [v, p] : batch)
          for (std::size_t w : p.variables())
            if (batch.count(w)) fail("batch values depend on batch variables");
        for (auto& e : state) e = e.substitute(batch);
        state = detail::normalize_equations(state);
        for (auto& [v, p] : sigma) p = p.substitute(batch);
        sigma.insert(batch.begin(), batch.end());
        return;
      }
    }
  }

  VarsPtr vars_;
  const std::vector<SolutionBranch>& branches_;
};

}  // namespace

CertificateCheck verify_certificate(const Certificate& c, const std::vector<SolutionBranch>& branches) {
  Replay r(c, branches);
  try {
    r.node(c.root, detail::normalize_equations(c.system.equations), {});
  } catch (const Failure& f) {
    r.result.ok = false;
    r.result.error = f.what;
  }
  return r.result;
}

bool check_branch_soundness(const PolynomialSystem& s, const SolutionBranch& b) {
  detail::MonomialColumns cols;
  detail::SparseEchelon ech;
  for (const auto& r : b.residual) ech.insert(cols.row(r));
  for (const auto& e : s.equations)
    if (!ech.contains(cols.row(e.substitute(b.assignment)))) return false;
  return true;
}

}  // namespace gapl
