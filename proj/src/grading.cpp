#include "gapl/grading.hpp"

#include <algorithm>

#include "gapl/errors.hpp"

namespace gapl {

std::size_t RootDatum::dim() const {
  std::size_t d = 0;
  for (const auto& c : components) d += c.basis.size();
  return d;
}

const Component* RootDatum::find(const Vec& functional) const {
  auto it = lookup.find(functional);
  return it == lookup.end() ? nullptr : &components[it->second];
}

bool RootDatum::is_root(const Vec& functional) const {
  return !is_zero(functional) && lookup.count(functional);
}

std::optional<Vec> RootDatum::weight_of(const Vec& v) const {
  if (is_zero(v)) return std::nullopt;
  for (const auto& c : components) {
    SpanIndex s(v.size());
    for (const auto& b : c.basis) s.insert(b);
    if (s.contains(v)) return c.functional;
  }
  return std::nullopt;
}

namespace {

mpz_class lcm_of_denominators(const Matrix& m) {
  mpz_class l = 1;
  for (const auto& x : m.data()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  return l;
}

}  // namespace

std::vector<Eigenspace> rational_eigenspaces(const Matrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return {};
  mpz_class k = lcm_of_denominators(m);
  Rational kr{mpq_class(k)};
  Matrix scaled = kr * m;
  std::vector<Rational> cp = charpoly(scaled);  // integer coefficients
  // Gershgorin bound on integer roots
  mpz_class bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(scaled(i, j).num());
    if (s > bound) bound = s;
  }
  std::vector<Rational> poly = cp;
  std::vector<std::pair<Rational, std::size_t>> roots;
  auto deflate = [&](const Rational& r) {
    // synthetic division of poly by (t - r); returns false if r is not a root
    std::vector<Rational> q(poly.size() - 1);
    Rational carry;
    for (std::size_t d = poly.size(); d-- > 1;) {
      carry = poly[d] + carry * r;
      q[d - 1] = carry;
    }
    Rational rem = poly[0] + carry * r;
    if (!rem.is_zero()) return false;
    poly = std::move(q);
    return true;
  };
  std::size_t zero_mult = 0;
  while (poly.size() > 1 && poly[0].is_zero()) {
    poly.erase(poly.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rational(0), zero_mult);
  if (poly.size() > 1) {
    mpz_class low = abs(poly[0].num());
    if (bound > 1000000) throw InvalidInput("eigenvalue search range too large");
    long b = bound.get_si();
    for (long cand = 1; cand <= b && poly.size() > 1; ++cand) {
      if (low % cand != 0) continue;
      for (long s : {cand, -cand}) {
        std::size_t mult = 0;
        while (poly.size() > 1 && deflate(Rational(s))) ++mult;
        if (mult) roots.emplace_back(Rational(s), mult);
      }
    }
  }
  if (poly.size() > 1) throw InvalidInput("non-rational eigenvalue detected");
  std::sort(roots.begin(), roots.end(), [](auto& a, auto& b) { return a.first > b.first; });
  std::vector<Eigenspace> out;
  for (const auto& [r, mult] : roots) {
    Matrix shifted = scaled;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= r;
    auto ker = kernel(shifted);
    if (ker.size() != mult) throw InvalidInput("action is not semisimple (defective eigenvalue)");
    out.push_back({r / kr, span_basis(ker, n)});
  }
  return out;
}

RootDatum root_decomposition(const LieAlgebra& L, const std::vector<Vec>& cartan) {
  std::size_t n = L.dim(), r = cartan.size();
  for (const auto& h : cartan)
    if (h.size() != n) throw InvalidInput("Cartan vector length mismatch");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (!is_zero(L.bracket(cartan[a], cartan[b])))
        throw InvalidInput("Cartan elements do not commute");
  if (r && rank(Matrix::from_rows(cartan, n)) != r)
    throw InvalidInput("Cartan elements are linearly dependent");

  std::vector<Matrix> ads;
  bool diagonal = true;
  for (const auto& h : cartan) {
    ads.push_back(L.ad(h));
    diagonal = diagonal && ads.back().is_diagonal();
  }

  // blocks of simultaneous eigenvectors: (functional prefix, basis)
  std::vector<std::pair<Vec, std::vector<Vec>>> blocks;
  if (diagonal) {
    std::map<Vec, std::vector<Vec>> groups;
    for (std::size_t j = 0; j < n; ++j) {
      Vec f(r);
      for (std::size_t a = 0; a < r; ++a) f[a] = ads[a](j, j);
      groups[f].push_back(unit_vec(n, j));
    }
    for (auto& [f, b] : groups) blocks.emplace_back(f, std::move(b));
  } else {
    std::vector<Vec> all;
    for (std::size_t j = 0; j < n; ++j) all.push_back(unit_vec(n, j));
    blocks.emplace_back(Vec{}, all);
    for (std::size_t a = 0; a < r; ++a) {
      std::vector<std::pair<Vec, std::vector<Vec>>> next;
      for (auto& [f, W] : blocks) {
        Matrix cols = Matrix::from_cols(W, n);
        Matrix restricted(W.size(), W.size());
        for (std::size_t k = 0; k < W.size(); ++k) {
          auto c = solve(cols, ads[a] * W[k]);
          if (!c) throw InvalidInput("Cartan action does not preserve a joint eigenspace");
          for (std::size_t i = 0; i < W.size(); ++i) restricted(i, k) = (*c)[i];
        }
        for (auto& es : rational_eigenspaces(restricted)) {
          std::vector<Vec> sub;
          for (const auto& c : es.basis) {
            Vec v(n);
            for (std::size_t k = 0; k < W.size(); ++k) axpy(v, c[k], W[k]);
            sub.push_back(v);
          }
          Vec g = f;
          g.push_back(es.value);
          next.emplace_back(g, span_basis(sub, n));
        }
      }
      blocks = std::move(next);
    }
  }

  RootDatum d;
  d.cartan = cartan;
  std::sort(blocks.begin(), blocks.end(), [](auto& x, auto& y) {
    bool zx = is_zero(x.first), zy = is_zero(y.first);
    if (zx != zy) return zx;
    return x.first > y.first;
  });
  if (blocks.empty() || !is_zero(blocks.front().first)) blocks.insert(blocks.begin(), {Vec(r), {}});
  for (auto& [f, b] : blocks) {
    d.lookup[f] = d.components.size();
    d.components.push_back({f, b});
  }

  // verify the decomposition: direct sum and eigen-relations
  std::vector<Vec> everything;
  for (const auto& c : d.components)
    for (const auto& v : c.basis) {
      everything.push_back(v);
      for (std::size_t a = 0; a < r; ++a)
        if (L.bracket(cartan[a], v) != scale(v, c.functional[a]))
          throw InvalidInput("root space eigen-relation failed");
    }
  if (everything.size() != n || rank(Matrix::from_rows(everything, n)) != n)
    throw InvalidInput("root spaces do not form a direct sum decomposition");

  d.adapted = true;
  d.basis_component.assign(n, 0);
  std::vector<bool> hit(n, false);
  for (std::size_t c = 0; c < d.components.size() && d.adapted; ++c)
    for (const auto& v : d.components[c].basis) {
      auto s = to_sparse(v);
      if (s.size() != 1 || !s[0].second.is_one()) {
        d.adapted = false;
        break;
      }
      d.basis_component[s[0].first] = c;
      hit[s[0].first] = true;
    }
  if (!d.adapted) d.basis_component.clear();
  if (!check_graded_product(L.table(), d)) throw InvalidInput("bracket does not respect the grading");
  return d;
}

bool check_graded_product(const BilinearTable& product, const RootDatum& datum) {
  std::size_t n = product.dim();
  if (datum.adapted) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const SparseVec& p = product.at(i, j);
        if (p.empty()) continue;
        Vec f = add(datum.components[datum.basis_component[i]].functional,
                    datum.components[datum.basis_component[j]].functional);
        auto it = datum.lookup.find(f);
        if (it == datum.lookup.end()) return false;
        for (const auto& [k, c] : p)
          if (datum.basis_component[k] != it->second) return false;
      }
    return true;
  }
  // general basis: coordinates with respect to the component basis
  std::vector<Vec> cols;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < datum.components.size(); ++c)
    for (const auto& v : datum.components[c].basis) {
      cols.push_back(v);
      owner.push_back(c);
    }
  auto P = inverse(Matrix::from_cols(cols, n));
  if (!P) return false;
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) {
      Vec p = product.apply(cols[a], cols[b]);
      if (is_zero(p)) continue;
      Vec f = add(datum.components[owner[a]].functional, datum.components[owner[b]].functional);
      auto it = datum.lookup.find(f);
      if (it == datum.lookup.end()) return false;
      Vec coords = *P * p;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero() && owner[k] != it->second) return false;
    }
  return true;
}

}  // namespace gapl
