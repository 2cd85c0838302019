#include "gapl/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "gapl/errors.hpp"

namespace gapl {

GroebnerBudget default_groebner_budget() {
  GroebnerBudget b;
  if (const char* env = std::getenv("GAPL_GB_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) b.max_reductions = static_cast<std::size_t>(v);
  }
  return b;
}

bool order_less(const Exponent& a, const Exponent& b, const OrderSpec& order) {
  std::size_t n = a.size();
  auto var = [&](std::size_t p) { return order.ranking.empty() ? p : order.ranking[p]; };
  if (order.kind == MonomialOrder::DegRevLex) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t p = n; p-- > 0;) {
      std::size_t v = var(p);
      if (a[v] != b[v]) return a[v] > b[v];
    }
    return false;
  }
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t v = var(p);
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

bool GroebnerBasis::contains_one() const {
  for (const auto& g : generators)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

namespace {

struct Term {
  Exponent e;
  Rational c;
};
using IPoly = std::vector<Term>;  // ascending; back() is the leading term

bool divides(const Exponent& d, const Exponent& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

Exponent quot(const Exponent& a, const Exponent& b) {
  Exponent q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

class Engine {
 public:
  Engine(VarsPtr vars, OrderSpec order) : vars_(std::move(vars)), order_(std::move(order)) {
    if (!order_.ranking.empty()) {
      std::vector<std::size_t> sorted = order_.ranking;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::size_t> expect(vars_ ? vars_->size() : 0);
      std::iota(expect.begin(), expect.end(), 0);
      if (sorted != expect) throw InvalidInput("variable ranking is not a permutation");
    }
  }

  bool less(const Exponent& a, const Exponent& b) const { return order_less(a, b, order_); }

  IPoly from(const MultiPoly& p) const {
    IPoly out;
    for (const auto& [e, c] : p.terms()) out.push_back({e, c});
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return less(a.e, b.e); });
    return out;
  }

  MultiPoly to(const IPoly& p) const {
    MultiPoly m(vars_);
    for (const auto& t : p) m.add_term(t.e, t.c);
    return m;
  }

  MultiPoly monomial(const Exponent& e, const Rational& c) const {
    MultiPoly m(vars_);
    m.add_term(e, c);
    return m;
  }

  // f - c * x^m * g
  IPoly sub_scaled(const IPoly& f, const Rational& c, const Exponent& m, const IPoly& g) const {
    IPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    Exponent shifted(m.size());
    auto shift = [&](const Exponent& e) {
      for (std::size_t k = 0; k < e.size(); ++k) shifted[k] = e[k] + m[k];
    };
    if (j < g.size()) shift(g[j].e);
    while (i < f.size() || j < g.size()) {
      if (j >= g.size() || (i < f.size() && less(f[i].e, shifted))) {
        out.push_back(f[i++]);
      } else if (i >= f.size() || less(shifted, f[i].e)) {
        out.push_back({shifted, -c * g[j].c});
        if (++j < g.size()) shift(g[j].e);
      } else {
        Rational v = f[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({f[i].e, v});
        ++i;
        if (++j < g.size()) shift(g[j].e);
      }
    }
    return out;
  }

  void make_monic(IPoly& p, std::vector<MultiPoly>* cof) const {
    if (p.empty()) return;
    Rational inv = p.back().c.inv();
    for (auto& t : p) t.c *= inv;
    if (cof)
      for (auto& c : *cof) c *= inv;
  }

  // full reduction; quotients accumulate into quo (if given) and cofactors into cof
  IPoly reduce(IPoly p, const std::vector<IPoly>& G, const std::vector<bool>& active,
               std::vector<MultiPoly>* cof, const std::vector<std::vector<MultiPoly>>* gcof,
               std::vector<MultiPoly>* quo, std::size_t skip = SIZE_MAX) const {
    IPoly rem;
    while (!p.empty()) {
      const Term lt = p.back();
      std::size_t k = 0;
      for (; k < G.size(); ++k)
        if (k != skip && active[k] && !G[k].empty() && divides(G[k].back().e, lt.e)) break;
      if (k == G.size()) {
        rem.push_back(lt);
        p.pop_back();
        continue;
      }
      Rational coef = lt.c / G[k].back().c;
      Exponent m = quot(lt.e, G[k].back().e);
      p = sub_scaled(p, coef, m, G[k]);
      if (cof && gcof) {
        MultiPoly mono = monomial(m, coef);
        for (std::size_t i = 0; i < cof->size(); ++i)
          if (!(*gcof)[k][i].is_zero()) (*cof)[i] -= mono * (*gcof)[k][i];
      }
      if (quo) (*quo)[k] += monomial(m, coef);
    }
    std::reverse(rem.begin(), rem.end());
    return rem;
  }

  const VarsPtr& vars() const { return vars_; }
  const OrderSpec& order() const { return order_; }

 private:
  VarsPtr vars_;
  OrderSpec order_;
};

VarsPtr common_vars(const std::vector<MultiPoly>& polys) {
  for (const auto& p : polys)
    if (p.vars()) return p.vars();
  return std::make_shared<VarRegistry>(std::vector<std::string>{});
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MultiPoly>& polys, const OrderSpec& order,
                         const GroebnerBudget& budget, bool track) {
  VarsPtr vars = common_vars(polys);
  Engine eng(vars, order);
  std::size_t m = polys.size();
  std::vector<IPoly> G;
  std::vector<std::vector<MultiPoly>> C;
  std::vector<bool> active;

  GroebnerBasis out;
  out.order = order;
  if (track) out.inputs = polys;

  auto finish_with_one = [&](std::vector<MultiPoly> cof) {
    out.generators = {MultiPoly(vars, Rational(1))};
    if (track) out.cofactors = {std::move(cof)};
    return out;
  };

  using Pair = std::pair<std::size_t, std::size_t>;
  auto pair_less = [&](const Pair& a, const Pair& b) {
    Exponent la = lcm(G[a.first].back().e, G[a.second].back().e);
    Exponent lb = lcm(G[b.first].back().e, G[b.second].back().e);
    if (eng.less(la, lb)) return true;
    if (eng.less(lb, la)) return false;
    return a < b;
  };
  std::set<Pair> pending;

  auto add_element = [&](IPoly h, std::vector<MultiPoly> cof) -> bool {
    eng.make_monic(h, track ? &cof : nullptr);
    std::size_t k = G.size();
    G.push_back(std::move(h));
    C.push_back(std::move(cof));
    active.push_back(true);
    for (std::size_t i = 0; i < k; ++i)
      if (active[i]) pending.insert({i, k});
    if (G.size() > budget.max_basis) throw Undecided("Groebner basis exceeded size budget");
    return total_degree(G.back().back().e) == 0;
  };

  for (std::size_t i = 0; i < m; ++i) {
    IPoly p = eng.from(polys[i]);
    std::vector<MultiPoly> cof;
    if (track) {
      cof.assign(m, MultiPoly(vars));
      cof[i] = MultiPoly(vars, Rational(1));
    }
    p = eng.reduce(std::move(p), G, active, track ? &cof : nullptr, track ? &C : nullptr, nullptr);
    if (p.empty()) continue;
    if (add_element(std::move(p), std::move(cof))) return finish_with_one(C.back());
  }

  std::size_t reductions = 0;
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair pr = *best;
    pending.erase(best);
    auto [i, j] = pr;
    if (!active[i] || !active[j]) continue;
    const Exponent& li = G[i].back().e;
    const Exponent& lj = G[j].back().e;
    if (coprime(li, lj)) continue;
    Exponent L = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || !active[k] || !divides(G[k].back().e, L)) continue;
      Pair ik{std::min(i, k), std::max(i, k)}, jk{std::min(j, k), std::max(j, k)};
      if (!pending.count(ik) && !pending.count(jk)) chain = true;
    }
    if (chain) continue;
    if (++reductions > budget.max_reductions)
      throw Undecided("Groebner computation exceeded reduction budget");
    Exponent mi = quot(L, li), mj = quot(L, lj);
    IPoly s = eng.sub_scaled(eng.sub_scaled({}, Rational(-1), mi, G[i]), Rational(1), mj, G[j]);
    std::vector<MultiPoly> cof;
    if (track) {
      cof.assign(m, MultiPoly(vars));
      MultiPoly a = eng.monomial(mi, 1), b = eng.monomial(mj, 1);
      for (std::size_t t = 0; t < m; ++t) cof[t] = a * C[i][t] - b * C[j][t];
    }
    IPoly h = eng.reduce(std::move(s), G, active, track ? &cof : nullptr, track ? &C : nullptr, nullptr);
    if (h.empty()) continue;
    if (add_element(std::move(h), std::move(cof))) return finish_with_one(C.back());
  }

  // minimal basis
  std::size_t n = G.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!active[k]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || !active[j]) continue;
      if (divides(G[j].back().e, G[k].back().e)) {
        active[k] = false;
        break;
      }
    }
  }
  // inter-reduce tails
  for (std::size_t k = 0; k < n; ++k) {
    if (!active[k]) continue;
    std::vector<MultiPoly> cof = track ? C[k] : std::vector<MultiPoly>{};
    IPoly r = eng.reduce(G[k], G, active, track ? &cof : nullptr, track ? &C : nullptr, nullptr, k);
    eng.make_monic(r, track ? &cof : nullptr);
    G[k] = std::move(r);
    if (track) C[k] = std::move(cof);
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (active[k]) keep.push_back(k);
  std::sort(keep.begin(), keep.end(),
            [&](std::size_t a, std::size_t b) { return eng.less(G[b].back().e, G[a].back().e); });
  for (auto k : keep) {
    out.generators.push_back(eng.to(G[k]));
    if (track) out.cofactors.push_back(C[k]);
  }
  return out;
}

Division divide(const MultiPoly& p, const GroebnerBasis& gb) {
  std::vector<MultiPoly> all = gb.generators;
  all.push_back(p);
  VarsPtr vars = common_vars(all);
  Engine eng(vars, gb.order);
  std::vector<IPoly> G;
  for (const auto& g : gb.generators) G.push_back(eng.from(g));
  std::vector<bool> active(G.size(), true);
  Division d;
  d.quotients.assign(G.size(), MultiPoly(vars));
  IPoly r = eng.reduce(eng.from(p), G, active, nullptr, nullptr, &d.quotients);
  d.remainder = eng.to(r);
  return d;
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) { return divide(p, gb).remainder; }

std::optional<std::vector<MultiPoly>> membership_cofactors(const MultiPoly& p, const GroebnerBasis& gb) {
  if (gb.generators.size() != gb.cofactors.size()) throw InvalidInput("Groebner basis is not tracked");
  Division d = divide(p, gb);
  if (!d.remainder.is_zero()) return std::nullopt;
  VarsPtr vars = common_vars(gb.inputs);
  std::vector<MultiPoly> out(gb.inputs.size(), MultiPoly(vars));
  for (std::size_t k = 0; k < d.quotients.size(); ++k) {
    if (d.quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!gb.cofactors[k][i].is_zero()) out[i] += d.quotients[k] * gb.cofactors[k][i];
  }
  return out;
}

bool s_polynomials_reduce_to_zero(const GroebnerBasis& gb) {
  VarsPtr vars = common_vars(gb.generators);
  Engine eng(vars, gb.order);
  std::vector<IPoly> G;
  for (const auto& g : gb.generators) G.push_back(eng.from(g));
  std::vector<bool> active(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      Exponent L = lcm(G[i].back().e, G[j].back().e);
      Exponent mi = quot(L, G[i].back().e), mj = quot(L, G[j].back().e);
      Rational ci = G[i].back().c.inv(), cj = G[j].back().c.inv();
      IPoly s = eng.sub_scaled(eng.sub_scaled({}, -ci, mi, G[i]), cj, mj, G[j]);
      if (!eng.reduce(std::move(s), G, active, nullptr, nullptr, nullptr).empty()) return false;
    }
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  VarsPtr vars = common_vars(gb.generators);
  Engine eng(vars, gb.order);
  std::vector<IPoly> G;
  for (const auto& g : gb.generators) G.push_back(eng.from(g));
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].empty() || !G[i].back().c.is_one()) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[j])
        if (divides(G[i].back().e, t.e)) return false;
    }
  }
  return true;
}

bool check_witness(const GroebnerWitness& w) {
  if (w.generators.size() != w.cofactors.size()) return false;
  VarsPtr vars = common_vars(w.generators);
  MultiPoly sum(vars);
  for (std::size_t i = 0; i < w.generators.size(); ++i) sum += w.cofactors[i] * w.generators[i];
  return sum == MultiPoly(vars, Rational(1));
}

std::optional<GroebnerWitness> prove_infeasible(const std::vector<MultiPoly>& polys,
                                                const GroebnerBudget& budget) {
  GroebnerBasis gb;
  try {
    gb = buchberger(polys, OrderSpec{}, budget, true);
  } catch (const Undecided&) {
    return std::nullopt;
  }
  if (!gb.contains_one()) return std::nullopt;
  GroebnerWitness w{polys, gb.cofactors.front()};
  if (!check_witness(w)) throw Error("internal: infeasibility witness failed re-expansion");
  return w;
}

}  // namespace gapl
