#include "gapl/apl.hpp"

#include "gapl/errors.hpp"

namespace gapl {

namespace {

void add_scaled(Vec& acc, const SparseVec& s, const Rational& c) {
  for (const auto& [k, x] : s) acc[k] += c * x;
}

// acc += c * (u o b_k) for sparse u
void add_left(const BilinearTable& t, Vec& acc, const SparseVec& u, std::size_t k, const Rational& c) {
  for (const auto& [i, x] : u) add_scaled(acc, t.at(i, k), c * x);
}

// acc += c * (b_i o u) for sparse u
void add_right(const BilinearTable& t, Vec& acc, std::size_t i, const SparseVec& u, const Rational& c) {
  for (const auto& [k, x] : u) add_scaled(acc, t.at(i, k), c * x);
}

}  // namespace

LieAlgebra commutator_algebra(const AntiPreLieAlgebra& A) {
  LieAlgebra L(A.basis);
  std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v(n);
      add_scaled(v, A.product.at(i, j), 1);
      add_scaled(v, A.product.at(j, i), -1);
      L.set_bracket(i, j, v);
    }
  return L;
}

ValidationReport validate_apl(const AntiPreLieAlgebra& A) {
  ValidationReport rep;
  std::size_t n = A.dim();
  const BilinearTable& t = A.product;
  if (t.dim() != n) {
    rep.notes.push_back("product table size does not match basis");
    return rep;
  }
  Vec acc(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      // [y, x] = y o x - x o y
      SparseVec yx = t.at(y, x);
      for (const auto& [k, c] : t.at(x, y)) {
        bool merged = false;
        for (auto& [kk, cc] : yx)
          if (kk == k) {
            cc -= c;
            merged = true;
          }
        if (!merged) yx.emplace_back(k, -c);
      }
      for (std::size_t z = 0; z < n; ++z) {
        add_right(t, acc, x, t.at(y, z), 1);
        add_right(t, acc, y, t.at(x, z), -1);
        add_left(t, acc, yx, z, -1);
        if (!is_zero(acc)) {
          rep.failures.push_back({"anti-pre-lie", x, y, z, acc});
          acc.assign(n, Rational());
        }
      }
    }
  LieAlgebra L = commutator_algebra(A);
  ValidationReport jac = validate_lie(L);
  for (auto& f : jac.failures) rep.failures.push_back(f);
  for (auto& s : jac.notes) rep.notes.push_back(s);
  return rep;
}

LieAlgebra subadjacent_lie(const AntiPreLieAlgebra& A) {
  ValidationReport r = validate_apl(A);
  if (!r.ok()) throw InvalidInput("not an anti-pre-Lie algebra: " + std::to_string(r.failures.size()) +
                                  " failing triple(s)");
  return commutator_algebra(A);
}

bool check_compatibility(const AntiPreLieAlgebra& A, const LieAlgebra& L) {
  if (A.basis != L.basis()) throw InvalidInput("basis mismatch between product and Lie algebra");
  return commutator_algebra(A).table() == L.table();
}

NegativeLeftMultRep negative_left_mult_rep(const AntiPreLieAlgebra& A,
                                           const std::optional<SlTriple>& triple) {
  std::size_t n = A.dim();
  NegativeLeftMultRep out;
  for (std::size_t i = 0; i < n; ++i)
    out.rho.push_back(Rational(-1) * A.product.left_mult(unit_vec(n, i)));
  LieAlgebra L = commutator_algebra(A);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix lhs(n, n);
      for (const auto& [k, c] : L.bracket_basis(i, j)) lhs = lhs + c * out.rho[k];
      if (!(lhs == commutator(out.rho[i], out.rho[j])))
        throw InvalidInput("rho([u,v]) != [rho(u), rho(v)] on (" + A.basis[i] + ", " + A.basis[j] +
                           "); the product violates the anti-pre-Lie identity");
    }
  if (triple) {
    const auto& [e, f, h] = *triple;
    if (L.bracket(h, e) != scale(e, 2) || L.bracket(h, f) != scale(f, -2) || L.bracket(e, f) != h)
      throw InvalidInput("designated elements are not an sl2-triple of the commutator algebra");
    auto image = [&](const Vec& v) {
      Matrix m(n, n);
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) m = m + v[k] * out.rho[k];
      return m;
    };
    out.sl2 = Sl2Action{n, image(e), image(f), image(h)};
  }
  return out;
}

AntiPreLieAlgebra reference_sl2_structure() {
  AntiPreLieAlgebra A{{"h1", "e12", "e21"}, BilinearTable(3)};
  const std::size_t h = 0, e = 1, f = 2;
  A.product.set(h, e, SparseVec{{e, Rational(-2)}});
  A.product.set(e, h, SparseVec{{e, Rational(-4)}});
  A.product.set(h, f, SparseVec{{f, Rational(2)}});
  A.product.set(f, h, SparseVec{{f, Rational(4)}});
  A.product.set(e, f, SparseVec{{h, Rational(1, 2)}});
  A.product.set(f, e, SparseVec{{h, Rational(-1, 2)}});
  return A;
}

}  // namespace gapl
