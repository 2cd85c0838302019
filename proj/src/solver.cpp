#include "gapl/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "gapl/errors.hpp"
#include "span.hpp"

namespace gapl {

namespace {

std::size_t unit_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  throw InvalidInput("zero vector in component basis");
}

std::string default_name(const LieAlgebra& L, const Unknown& u) {
  return "c(" + L.label(u.i) + "," + L.label(u.j) + "," + L.label(u.k) + ")";
}

}  // namespace

BilinearTable ProductTemplate::realize(const std::map<std::size_t, Rational>& values) const {
  BilinearTable t(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec v(dim());
      for (std::size_t k = 0; k < dim(); ++k) v[k] = entry(i, j)[k].evaluate(values);
      t.set(i, j, v);
    }
  return t;
}

ProductTemplate build_template(std::shared_ptr<const LieAlgebra> L, const RootDatum& datum,
                               const Restrictions& restrictions, const UnknownNamer& namer) {
  const std::size_t n = L->dim();
  if (!datum.adapted || datum.basis_component.size() != n)
    throw InvalidInput("build_template needs a basis adapted to the root decomposition");

  // zero-weight basis vectors first
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (datum.basis_component[i] == 0) order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (datum.basis_component[i] != 0) order.push_back(i);
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;

  auto targets_of = [&](std::size_t i, std::size_t j) {
    Vec f = add(datum.components[datum.basis_component[i]].functional,
                datum.components[datum.basis_component[j]].functional);
    std::vector<std::size_t> out;
    if (const Component* c = datum.find(f))
      for (const auto& b : c->basis) out.push_back(unit_index(b));
    std::sort(out.begin(), out.end());
    return out;
  };

  for (const auto& [pair, allowed] : restrictions) {
    if (pair.first >= n || pair.second >= n) throw InvalidInput("restriction names a pair outside the basis");
    auto graded = targets_of(pair.first, pair.second);
    for (std::size_t k : allowed)
      if (!std::binary_search(graded.begin(), graded.end(), k))
        throw InvalidInput("restriction on (" + L->label(pair.first) + "," + L->label(pair.second) +
                           ") allows " + (k < n ? L->label(k) : std::to_string(k)) +
                           ", which is outside the graded component");
  }
  auto allowed = [&](std::size_t i, std::size_t j, std::size_t k) {
    auto it = restrictions.find({i, j});
    if (it == restrictions.end()) return true;
    return std::find(it->second.begin(), it->second.end(), k) != it->second.end();
  };

  struct Slot {
    std::size_t i, j, k;
    bool unknown;
    Rational value;  // when pinned
  };
  std::vector<Slot> slots;
  std::vector<Unknown> unknowns;
  for (std::size_t pi = 0; pi < n; ++pi)
    for (std::size_t pj = pi; pj < n; ++pj) {
      const std::size_t i = order[pi], j = order[pj];
      const Vec br = L->bracket(L->basis_vector(i), L->basis_vector(j));
      for (std::size_t k : targets_of(i, j)) {
        const bool a = allowed(i, j, k), b = i == j ? a : allowed(j, i, k);
        if (a && b) {
          slots.push_back({i, j, k, true, {}});
          unknowns.push_back({i, j, k});
        } else if (!a && b) {
          slots.push_back({i, j, k, false, Rational(0)});
        } else if (a && !b) {
          slots.push_back({i, j, k, false, br[k]});
        } else if (!br[k].is_zero()) {
          throw InvalidInput("restrictions on (" + L->label(i) + "," + L->label(j) +
                             ") contradict the bracket");
        } else {
          slots.push_back({i, j, k, false, Rational(0)});
        }
      }
    }

  std::vector<std::string> names;
  for (const auto& u : unknowns) names.push_back(namer ? namer(*L, u) : default_name(*L, u));
  ProductTemplate t;
  t.algebra = L;
  t.datum = datum;
  t.vars = std::make_shared<VarRegistry>(names);
  t.unknowns = unknowns;
  t.entries.assign(n * n, std::vector<MultiPoly>(n, MultiPoly(t.vars)));

  std::size_t next = 0;
  for (const auto& s : slots) {
    MultiPoly u = s.unknown ? MultiPoly::variable(t.vars, next++) : MultiPoly(t.vars, s.value);
    if (!s.unknown) t.tied[{s.i, s.j, s.k}] = s.value;
    t.entries[s.i * n + s.j][s.k] = u;
  }
  // entry(j, i) = entry(i, j) - [b_i, b_j]
  for (std::size_t pi = 0; pi < n; ++pi)
    for (std::size_t pj = pi + 1; pj < n; ++pj) {
      const std::size_t i = order[pi], j = order[pj];
      const Vec br = L->bracket(L->basis_vector(i), L->basis_vector(j));
      for (std::size_t k = 0; k < n; ++k)
        t.entries[j * n + i][k] = t.entries[i * n + j][k] - MultiPoly(t.vars, br[k]);
    }
  return t;
}

PolynomialSystem generate_constraints(const ProductTemplate& t) {
  const std::size_t n = t.dim();
  const LieAlgebra& L = *t.algebra;
  using SparseEntry = std::vector<std::pair<std::size_t, const MultiPoly*>>;
  std::vector<SparseEntry> sparse(n * n);
  for (std::size_t p = 0; p < n * n; ++p)
    for (std::size_t k = 0; k < n; ++k)
      if (!t.entries[p][k].is_zero()) sparse[p].emplace_back(k, &t.entries[p][k]);

  PolynomialSystem s;
  s.vars = t.vars;
  std::set<MultiPoly> seen;
  std::vector<MultiPoly> res(n, MultiPoly(t.vars));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const SparseVec& vu = L.bracket_basis(v, u);
      for (std::size_t w = 0; w < n; ++w) {
        for (auto& r : res) r = MultiPoly(t.vars);
        // u o (v o w)
        for (const auto& [m, c] : sparse[v * n + w])
          for (const auto& [k, d] : sparse[u * n + m]) res[k] += (*c) * (*d);
        // - v o (u o w)
        for (const auto& [m, c] : sparse[u * n + w])
          for (const auto& [k, d] : sparse[v * n + m]) res[k] -= (*c) * (*d);
        // - [v, u] o w
        for (const auto& [l, c] : vu)
          for (const auto& [k, d] : sparse[l * n + w]) res[k] -= c * (*d);
        for (std::size_t k = 0; k < n; ++k) {
          if (res[k].is_zero()) continue;
          if (!seen.insert(res[k].monic()).second) continue;
          s.equations.push_back(res[k]);
          s.provenance.push_back("(" + L.label(u) + "," + L.label(v) + "," + L.label(w) + ")@" + L.label(k));
        }
      }
    }
  return s;
}

std::string outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Unique: return "unique";
    case OutcomeKind::Family: return "family";
    case OutcomeKind::Infeasible: return "infeasible";
  }
  return "?";
}

std::map<std::size_t, Rational> SolveOutcome::values() const {
  std::map<std::size_t, Rational> out;
  if (kind != OutcomeKind::Unique) return out;
  for (const auto& [v, p] : branches.front().assignment) out.emplace(v, p.constant_term());
  return out;
}

SolverLimits default_solver_limits() {
  SolverLimits l;
  if (const char* b = std::getenv("GAPL_MAX_BRANCHES")) l.max_branches = std::strtoul(b, nullptr, 10);
  if (const char* d = std::getenv("GAPL_MAX_STEPS")) l.max_depth = std::strtoul(d, nullptr, 10);
  return l;
}

namespace {

std::string describe_system(const std::vector<MultiPoly>& eqs) {
  std::ostringstream os;
  os << eqs.size() << " equation(s)";
  for (std::size_t i = 0; i < eqs.size() && i < 8; ++i) os << (i ? "; " : ": ") << eqs[i].str() << " = 0";
  if (eqs.size() > 8) os << "; ...";
  return os.str();
}

class Solver {
 public:
  Solver(const PolynomialSystem& s, const SolverLimits& lim) : sys_(s), lim_(lim), vars_(s.vars) {}

  SolveOutcome run() {
    SolveOutcome out;
    out.certificate.system = sys_;
    explore(detail::normalize_equations(sys_.equations), {}, 0, out.certificate.root);
    out.branches = branches_;
    if (branches_.empty())
      out.kind = OutcomeKind::Infeasible;
    else if (branches_.size() == 1 && branches_[0].free_vars.empty() && branches_[0].residual.empty())
      out.kind = OutcomeKind::Unique;
    else
      out.kind = OutcomeKind::Family;
    return out;
  }

 private:
  using Assignment = std::map<std::size_t, MultiPoly>;

  // variables appearing as a bare linear term in more equations rank first
  std::vector<std::size_t> ranking(const std::vector<MultiPoly>& eqs) const {
    const std::size_t nv = vars_->size();
    std::vector<std::size_t> count(nv, 0);
    for (const auto& e : eqs)
      for (const auto& [ex, c] : e.terms())
        if (total_degree(ex) == 1)
          for (std::size_t v = 0; v < nv; ++v)
            if (ex[v]) ++count[v];
    std::vector<std::size_t> order(nv);
    for (std::size_t v = 0; v < nv; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return count[a] > count[b]; });
    return order;
  }

  std::vector<MultiPoly> linear_rref(const std::vector<MultiPoly>& eqs, const std::vector<std::size_t>& rank) const {
    std::set<Exponent> monos;
    for (const auto& e : eqs)
      for (const auto& [ex, c] : e.terms()) monos.insert(ex);
    std::vector<Exponent> nonlinear, ordered;
    for (const auto& m : monos)
      if (total_degree(m) >= 2) nonlinear.push_back(m);
    std::sort(nonlinear.begin(), nonlinear.end(), [](const Exponent& a, const Exponent& b) { return degrevlex_less(b, a); });
    detail::MonomialColumns cols;
    for (const auto& m : nonlinear) cols.id(m);
    const std::size_t nv = vars_->size();
    for (std::size_t v : rank) {
      Exponent e(nv, 0);
      e[v] = 1;
      if (monos.count(e)) cols.id(e);
    }
    cols.id(Exponent(nv, 0));
    detail::SparseEchelon ech;
    for (const auto& e : eqs) ech.insert(cols.row(e));
    std::vector<MultiPoly> rows;
    for (const auto& r : ech.rref()) rows.push_back(cols.poly(vars_, r));
    return rows;
  }

  void count_paths(std::size_t extra, const std::vector<MultiPoly>& state) {
    paths_ += extra;
    if (paths_ > lim_.max_branches)
      throw Undecided("branch limit " + std::to_string(lim_.max_branches) + " exceeded; residual " +
                      describe_system(state));
  }

  void leaf(const std::vector<MultiPoly>& state, const Assignment& sigma, CertNode& node) {
    SolutionBranch b;
    b.assignment = sigma;
    for (std::size_t v = 0; v < vars_->size(); ++v)
      if (!sigma.count(v)) b.free_vars.push_back(v);
    b.residual = state;
    auto it = std::find(branches_.begin(), branches_.end(), b);
    node.end = CertNode::End::Leaf;
    node.leaf = static_cast<std::size_t>(it - branches_.begin());
    if (it == branches_.end()) branches_.push_back(std::move(b));
  }

  // a variable in which e splits into proper factors, with the distinct factors
  static std::optional<std::pair<std::size_t, std::vector<MultiPoly>>> split(const MultiPoly& e,
                                                                              const std::vector<std::size_t>& rank) {
    if (e.degree() < 2) return std::nullopt;
    for (std::size_t v : rank) {
      const unsigned d = e.degree_in(v);
      if (d == 0 || d > 2) continue;
      Factorization f = factor_univariate_in(e, v);
      if (f.irreducible) continue;
      std::vector<MultiPoly> distinct;
      for (const auto& p : f.factors)
        if (!p.is_constant() && std::find(distinct.begin(), distinct.end(), p) == distinct.end())
          distinct.push_back(p);
      if (distinct.empty() || (distinct.size() == 1 && distinct[0] == e.monic())) continue;
      return std::make_pair(v, distinct);
    }
    return std::nullopt;
  }

  bool try_branch(const std::vector<MultiPoly>& state, const std::vector<std::size_t>& rank, const Assignment& sigma,
                  std::size_t depth, CertNode& node, bool univariate_only = false) {
    struct Choice {
      unsigned degree;
      std::size_t terms, eq, var;
      std::vector<MultiPoly> factors;
    };
    std::optional<Choice> best;
    for (std::size_t i = 0; i < state.size(); ++i) {
      const MultiPoly& e = state[i];
      if (univariate_only && e.variables().size() != 1) continue;
      if (best && std::tie(best->degree, best->terms) <= std::make_tuple(e.degree(), e.size())) continue;
      if (auto sp = split(e, rank)) best = Choice{e.degree(), e.size(), i, sp->first, sp->second};
    }
    if (!best) return false;
    count_paths(best->factors.size() - 1, state);
    node.end = CertNode::End::Branch;
    node.eq = best->eq;
    node.var = best->var;
    node.factors = best->factors;
    node.children.resize(best->factors.size());
    for (std::size_t c = 0; c < best->factors.size(); ++c) {
      auto child = state;
      child.push_back(best->factors[c]);
      explore(std::move(child), sigma, depth, node.children[c]);
    }
    return true;
  }

  void explore(std::vector<MultiPoly> state, Assignment sigma, std::size_t depth, CertNode& node) {
    auto contradiction = [&] {
      for (std::size_t i = 0; i < state.size(); ++i)
        if (state[i].is_constant()) {
          node.end = CertNode::End::ConstantContradiction;
          node.eq = i;
          node.value = state[i].constant_term();
          return true;
        }
      return false;
    };
    for (;;) {
      if (contradiction()) return;
      if (state.empty()) return leaf(state, sigma, node);

      const auto rank = ranking(state);
      auto rows = linear_rref(state, rank);
      if (rows != state) {
        Step st;
        st.kind = Step::Kind::Reduce;
        st.polys = rows;
        node.steps.push_back(std::move(st));
        state = std::move(rows);
        if (contradiction()) return;
      }

      Step sub;
      sub.kind = Step::Kind::Substitute;
      Assignment batch;
      for (std::size_t i = 0; i < state.size(); ++i) {
        const MultiPoly& r = state[i];
        if (r.degree() != 1) continue;
        std::size_t pivot = 0;
        for (std::size_t v : rank)
          if (r.degree_in(v)) {
            pivot = v;
            break;
          }
        MultiPoly value = MultiPoly::variable(vars_, pivot) - r;  // the pivot coefficient is 1
        batch.emplace(pivot, value);
        sub.batch.push_back({pivot, value, i});
      }
      if (!batch.empty()) {
        if (++depth > lim_.max_depth)
          throw Undecided("step limit " + std::to_string(lim_.max_depth) + " exceeded; residual " +
                          describe_system(state));
        for (auto& e : state) e = e.substitute(batch);
        state = detail::normalize_equations(state);
        for (auto& [v, p] : sigma) p = p.substitute(batch);
        sigma.insert(batch.begin(), batch.end());
        node.steps.push_back(std::move(sub));
        continue;
      }

      bool homogeneous = std::none_of(state.begin(), state.end(), [](const MultiPoly& e) { return e.has_constant_term(); });
      // the origin solves what is left; only pin down variables with finitely many values
      if (homogeneous) {
        if (!try_branch(state, rank, sigma, depth, node, true)) leaf(state, sigma, node);
        return;
      }
      if (try_branch(state, rank, sigma, depth, node)) return;

      GroebnerBasis gb;
      try {
        gb = buchberger(state, {}, lim_.groebner, true);
      } catch (const Undecided&) {
        throw Undecided("groebner budget exceeded; residual " + describe_system(state));
      }
      if (gb.contains_one()) {
        node.end = CertNode::End::GroebnerWitness;
        node.cofactors = gb.cofactors.front();
        return;
      }
      Step der;
      der.kind = Step::Kind::Derive;
      for (std::size_t g = 0; g < gb.generators.size(); ++g)
        if (gb.generators[g].degree() == 1) {
          der.polys.push_back(gb.generators[g]);
          der.cofactors.push_back(gb.cofactors[g]);
        }
      if (der.polys.empty())
        for (std::size_t g = 0; g < gb.generators.size(); ++g) {
          const MultiPoly& p = gb.generators[g];
          if (std::find(state.begin(), state.end(), p) != state.end() || !split(p, rank)) continue;
          der.polys.push_back(p);
          der.cofactors.push_back(gb.cofactors[g]);
        }
      // solvable over C but no rational split: not resolved here
      if (der.polys.empty())
        throw Undecided("no rational factor to branch on; residual " + describe_system(state));
      if (++depth > lim_.max_depth)
        throw Undecided("step limit " + std::to_string(lim_.max_depth) + " exceeded; residual " +
                        describe_system(state));
      state.insert(state.end(), der.polys.begin(), der.polys.end());
      node.steps.push_back(std::move(der));
    }
  }

  const PolynomialSystem& sys_;
  SolverLimits lim_;
  VarsPtr vars_;
  std::vector<SolutionBranch> branches_;
  std::size_t paths_ = 1;
};

}  // namespace

SolveOutcome solve_system(const PolynomialSystem& s, const SolverLimits& limits) {
  return Solver(s, limits).run();
}

GradedSolution solve_graded(std::shared_ptr<const LieAlgebra> L, const std::vector<Vec>& cartan,
                            const Restrictions& restrictions, const SolverLimits& limits) {
  GradedSolution out;
  RootDatum datum = root_decomposition(*L, cartan);
  out.tmpl = build_template(L, datum, restrictions);
  out.system = generate_constraints(out.tmpl);
  out.outcome = solve_system(out.system, limits);
  for (const auto& b : out.outcome.branches) {
    if (!b.free_vars.empty() || !b.residual.empty()) continue;
    std::map<std::size_t, Rational> values;
    for (const auto& [v, p] : b.assignment) values.emplace(v, p.constant_term());
    AntiPreLieAlgebra A{L->basis(), out.tmpl.realize(values)};
    if (!validate_apl(A).ok()) throw StageError("solve_graded", "solved structure fails the anti-pre-Lie axioms");
    if (!check_compatibility(A, *L)) throw StageError("solve_graded", "solved structure has the wrong commutator");
    if (!check_graded_product(A.product, datum)) throw StageError("solve_graded", "solved structure is not graded");
    out.structures.push_back(std::move(A));
  }
  return out;
}

}  // namespace gapl
