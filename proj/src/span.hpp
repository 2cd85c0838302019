#pragma once

// Sparse rational elimination over monomial columns, shared by the solver and
// the certificate checker.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "gapl/poly.hpp"

namespace gapl::detail {

using SparseRow = std::map<std::size_t, Rational>;

class SparseEchelon {
 public:
  void reduce(SparseRow& row) const {
    auto it = row.begin();
    while (it != row.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      for (std::size_t t = 1; t < p->second.size(); ++t) {
        const auto& [c, v] = p->second[t];
        Rational& x = row[c];
        x -= f * v;
        if (x.is_zero()) row.erase(c);
      }
      it = row.erase(it);
    }
  }

  bool insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const Rational lead = row.begin()->second.inv();
    std::vector<std::pair<std::size_t, Rational>> r;
    r.reserve(row.size());
    for (auto& [c, v] : row) r.emplace_back(c, v * lead);
    pivots_.emplace(r.front().first, std::move(r));
    return true;
  }

  bool contains(SparseRow row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t rank() const { return pivots_.size(); }

  // fully reduced rows in increasing pivot order
  std::vector<SparseRow> rref() const {
    SparseEchelon done;
    std::vector<SparseRow> out;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseRow row(it->second.begin(), it->second.end());
      done.reduce_tail(row);
      done.pivots_.emplace(it->first, std::vector<std::pair<std::size_t, Rational>>(row.begin(), row.end()));
      out.push_back(std::move(row));
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  // reduces every entry except the leading one
  void reduce_tail(SparseRow& row) const {
    auto lead = *row.begin();
    row.erase(row.begin());
    reduce(row);
    row.emplace(lead.first, lead.second);
  }

  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> pivots_;
};

// Assigns column ids to monomials; ids follow the order of first registration
// unless the caller supplies an explicit ordering.
class MonomialColumns {
 public:
  std::size_t id(const Exponent& e) {
    auto [it, fresh] = ids_.emplace(e, monos_.size());
    if (fresh) monos_.push_back(e);
    return it->second;
  }
  const Exponent& monomial(std::size_t c) const { return monos_[c]; }
  std::size_t size() const { return monos_.size(); }

  SparseRow row(const MultiPoly& p) {
    SparseRow r;
    for (const auto& [e, c] : p.terms()) r.emplace(id(e), c);
    return r;
  }
  MultiPoly poly(const VarsPtr& vars, const SparseRow& r) const {
    MultiPoly p(vars);
    for (const auto& [c, v] : r) p.add_term(monos_[c], v);
    return p;
  }

 private:
  std::map<Exponent, std::size_t> ids_;
  std::vector<Exponent> monos_;
};

// drop zero polynomials and exact duplicates, keeping first occurrences
inline std::vector<MultiPoly> normalize_equations(const std::vector<MultiPoly>& eqs) {
  std::vector<MultiPoly> out;
  std::set<MultiPoly> seen;
  for (const auto& e : eqs)
    if (!e.is_zero() && seen.insert(e).second) out.push_back(e);
  return out;
}

inline bool same_span(const VarsPtr&, const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  MonomialColumns cols;
  SparseEchelon ea, eb, both;
  for (const auto& p : a) {
    auto r = cols.row(p);
    ea.insert(r);
    both.insert(r);
  }
  for (const auto& p : b) {
    auto r = cols.row(p);
    eb.insert(r);
    both.insert(r);
  }
  return ea.rank() == both.rank() && eb.rank() == both.rank();
}

}  // namespace gapl::detail
