#include "gapl/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gapl/errors.hpp"

namespace gapl {

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second)
      throw InvalidInput("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarRegistry::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t VarRegistry::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InvalidInput("unknown variable '" + std::string(name) + "'");
  return *i;
}

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool degrevlex_less(const Exponent& a, const Exponent& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MultiPoly::MultiPoly(VarsPtr vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(VarsPtr vars, const Rational& c) : vars_(std::move(vars)) {
  if (!c.is_zero()) terms_.emplace(Exponent(nvars(), 0), c);
}

MultiPoly MultiPoly::variable(VarsPtr vars, std::size_t v) {
  MultiPoly p(std::move(vars));
  if (v >= p.nvars()) throw InvalidInput("variable index out of range");
  Exponent e(p.nvars(), 0);
  e[v] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::variable(VarsPtr vars, std::string_view name) {
  std::size_t v = vars->index(name);
  return variable(std::move(vars), v);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  if (terms_.empty()) return Rational();
  // the all-zero exponent is the smallest key
  const auto& [e, c] = *terms_.begin();
  return total_degree(e) == 0 ? c : Rational();
}

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[v]);
  return d;
}

std::vector<std::size_t> MultiPoly::variables() const {
  std::vector<bool> seen(nvars(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

std::pair<Exponent, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) return {Exponent(nvars(), 0), Rational()};
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (degrevlex_less(best->first, it->first)) best = it;
  return *best;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  MultiPoly out = *this;
  out *= leading_term().second.inv();
  return out;
}

MultiPoly MultiPoly::coefficient_of(std::size_t v, unsigned d) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] != d) continue;
    Exponent f = e;
    f[v] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ && o.vars_ && vars_ != o.vars_ && vars_->names() != o.vars_->names())
    throw InvalidInput("polynomials over different variable registries");
}

void MultiPoly::adopt_vars(const MultiPoly& o) {
  check_compatible(o);
  if (!vars_ && o.vars_) {
    Exponent zero(o.nvars(), 0);
    TermMap fixed;
    for (auto& [e, c] : terms_) fixed.emplace(zero, c);
    terms_ = std::move(fixed);
    vars_ = o.vars_;
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adopt_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adopt_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.vars_ ? a.vars_ : b.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  std::size_t n = out.nvars();
  Exponent e(n, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out(vars_, Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t v, const MultiPoly& value) const {
  std::map<std::size_t, MultiPoly> subs;
  subs.emplace(v, value);
  return substitute(subs);
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, MultiPoly>& subs) const {
  for (const auto& [v, val] : subs)
    if (v >= nvars()) throw InvalidInput("substitution target not in registry");
  MultiPoly out(vars_);
  // cache powers of each substituted value
  std::map<std::pair<std::size_t, unsigned>, MultiPoly> powers;
  std::function<const MultiPoly&(std::size_t, unsigned)> power =
      [&](std::size_t v, unsigned k) -> const MultiPoly& {
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    MultiPoly p = k == 1 ? subs.at(v) : power(v, k - 1) * subs.at(v);
    if (!p.vars_) p = MultiPoly(vars_) + p;
    return powers.emplace(key, std::move(p)).first->second;
  };
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    bool touched = false;
    for (const auto& [v, val] : subs)
      if (e[v]) {
        rest[v] = 0;
        touched = true;
      }
    if (!touched) {
      out.add_term(e, c);
      continue;
    }
    MultiPoly t(vars_);
    t.terms_.emplace(rest, c);
    for (const auto& [v, val] : subs)
      if (e[v]) t = t * power(v, e[v]);
    out += t;
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::size_t, Rational>& point) const {
  std::vector<std::size_t> missing;
  for (std::size_t v : variables())
    if (!point.count(v)) missing.push_back(v);
  if (!missing.empty()) {
    std::string msg = "missing assignment for:";
    for (auto v : missing) msg += " " + vars_->name(v);
    throw MissingAssignment(msg);
  }
  Rational out;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      const Rational& x = point.at(i);
      for (unsigned k = 0; k < e[i]; ++k) t *= x;
    }
    out += t;
  }
  return out;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return degrevlex_less(b->first, a->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool wrote = false;
    if (constant || !mag.is_one()) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << vars_->name(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

namespace {

bool divides(const Exponent& d, const Exponent& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

MultiPoly monomial(const VarsPtr& vars, Exponent e, const Rational& c) {
  MultiPoly m(vars);
  m.add_term(e, c);
  return m;
}

}  // namespace

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DivisionByZero();
  const VarsPtr& vars = p.vars() ? p.vars() : d.vars();
  auto [ld, lc] = d.leading_term();
  MultiPoly rem = p, quo(vars);
  if (!rem.vars()) rem = MultiPoly(vars) + rem;
  while (!rem.is_zero()) {
    auto [lr, rc] = rem.leading_term();
    if (!divides(ld, lr)) return std::nullopt;
    Exponent q(lr.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = lr[i] - ld[i];
    MultiPoly t = monomial(vars, q, rc / lc);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  if (p.is_zero()) return p;
  auto [lp, lc] = p.leading_term();
  Exponent half(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) {
    if (lp[i] % 2) return std::nullopt;
    half[i] = lp[i] / 2;
  }
  Rational root;
  if (!rational_sqrt(lc, root)) return std::nullopt;
  MultiPoly r = monomial(p.vars(), half, root);
  MultiPoly twice_lead = monomial(p.vars(), half, root * Rational(2));
  MultiPoly rem = p - r * r;
  for (std::size_t iter = 0; !rem.is_zero() && iter <= p.size(); ++iter) {
    auto [le, c] = rem.leading_term();
    if (!divides(half, le)) return std::nullopt;
    Exponent q(le.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = le[i] - half[i];
    MultiPoly t = monomial(p.vars(), q, c / (root * Rational(2)));
    rem -= t * (r + r + t);
    r += t;
  }
  if (!rem.is_zero() || !(r * r == p)) return std::nullopt;
  return r;
}

namespace {

void finish(Factorization& f) {
  for (auto& g : f.factors) {
    Rational lc = g.leading_term().second;
    f.unit *= lc;
    g = g.monic();
  }
  std::sort(f.factors.begin(), f.factors.end(), [](const MultiPoly& a, const MultiPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
  });
}

}  // namespace

Factorization factor_univariate_in(const MultiPoly& p, std::size_t v) {
  unsigned d = p.degree_in(v);
  if (d > 2) throw InvalidInput("factor_univariate_in: degree in variable exceeds 2");
  Factorization f;
  auto unchanged = [&] {
    Factorization g;
    g.factors = {p};
    g.irreducible = true;
    return g;
  };
  if (d == 0 || p.is_zero()) return unchanged();
  const VarsPtr& vars = p.vars();
  MultiPoly var = MultiPoly::variable(vars, v);
  MultiPoly c = p.coefficient_of(v, 0);
  MultiPoly b = p.coefficient_of(v, 1);
  MultiPoly a = p.coefficient_of(v, 2);

  if (c.is_zero()) {
    MultiPoly rest = d == 2 ? a * var + b : b;
    f.factors = {var};
    if (!rest.is_constant()) {
      // rest may split further when it is linear in v
      if (rest.degree_in(v) == 1 && !rest.coefficient_of(v, 1).is_constant()) {
        auto inner = factor_univariate_in(rest, v);
        if (!inner.irreducible) {
          f.unit = inner.unit;
          for (auto& g : inner.factors) f.factors.push_back(g);
          finish(f);
          return f;
        }
      }
      f.factors.push_back(rest);
    } else {
      f.unit = rest.constant_term();
    }
    finish(f);
    return f;
  }

  if (d == 1) {
    if (b.is_constant()) {
      f.factors = {p};
      finish(f);
      return f;
    }
    auto q = exact_divide(c, b);
    if (!q) return unchanged();
    f.factors = {b, var + *q};
    finish(f);
    return f;
  }

  if (!a.is_constant()) {
    // common polynomial content a | b | c
    auto qb = exact_divide(b, a);
    auto qc = exact_divide(c, a);
    if (!qb || !qc) return unchanged();
    MultiPoly monic_part = var * var + *qb * var + *qc;
    auto inner = factor_univariate_in(monic_part, v);
    if (inner.irreducible) return unchanged();
    f.unit = inner.unit;
    f.factors = {a};
    for (auto& g : inner.factors) f.factors.push_back(g);
    finish(f);
    return f;
  }

  Rational ac = a.constant_term();
  MultiPoly disc = b * b - Rational(4) * ac * c;
  auto root = poly_sqrt(disc);
  if (!root) return unchanged();
  Rational inv2a = (Rational(2) * ac).inv();
  MultiPoly r1 = (-b + *root) * inv2a;
  MultiPoly r2 = (-b - *root) * inv2a;
  f.unit = ac;
  f.factors = {var - r1, var - r2};
  finish(f);
  return f;
}

}  // namespace gapl
