#include "gapl/lie.hpp"

#include <algorithm>
#include <unordered_map>

#include "gapl/errors.hpp"

namespace gapl {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& s, std::size_t dim) {
  Vec v(dim);
  for (const auto& [k, c] : s) v.at(k) = c;
  return v;
}

void BilinearTable::set(std::size_t i, std::size_t j, SparseVec v) {
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  v.erase(std::remove_if(v.begin(), v.end(), [](auto& t) { return t.second.is_zero(); }), v.end());
  for (auto& [k, c] : v)
    if (k >= dim_) throw InvalidInput("table entry index out of range");
  t_.at(i * dim_ + j) = std::move(v);
}

Vec BilinearTable::apply(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InvalidInput("vector length mismatch");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const SparseVec& e = at(i, j);
      if (e.empty()) continue;
      Rational f = u[i] * v[j];
      for (const auto& [k, c] : e) out[k] += f * c;
    }
  }
  return out;
}

Matrix BilinearTable::left_mult(const Vec& u) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : at(i, j)) m(k, j) += u[i] * c;
  }
  return m;
}

Matrix BilinearTable::right_mult(const Vec& u) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (u[j].is_zero()) continue;
    for (std::size_t i = 0; i < dim_; ++i)
      for (const auto& [k, c] : at(i, j)) m(k, i) += u[j] * c;
  }
  return m;
}

LieAlgebra::LieAlgebra(std::vector<std::string> basis)
    : basis_(std::move(basis)), table_(basis_.size()) {
  std::vector<std::string> sorted = basis_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("duplicate basis label");
}

std::optional<std::size_t> LieAlgebra::find(const std::string& label) const {
  auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t LieAlgebra::index(const std::string& label) const {
  auto i = find(label);
  if (!i) throw InvalidInput("unknown basis label '" + label + "'");
  return *i;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  set_bracket(i, j, to_sparse(v));
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVec v) {
  if (i == j) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](auto& t) { return !t.second.is_zero(); });
    if (nonzero) throw InvalidInput("[b_i, b_i] must vanish");
    return;
  }
  SparseVec neg = v;
  for (auto& [k, c] : neg) c = -c;
  table_.set(i, j, std::move(v));
  table_.set(j, i, std::move(neg));
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const { return table_.apply(u, v); }

Vec bracket(const LieAlgebra& L, const Vec& u, const Vec& v) { return L.bracket(u, v); }

namespace {

// accumulates sum_k c_k [b_k, b_m] into acc
void add_bracket_right(const BilinearTable& t, const SparseVec& x, std::size_t m, const Rational& s,
                       Vec& acc) {
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : t.at(k, m)) acc[l] += s * c * d;
}

}  // namespace

ValidationReport validate_lie(const LieAlgebra& L) {
  ValidationReport rep;
  std::size_t n = L.dim();
  const BilinearTable& t = L.table();
  for (std::size_t i = 0; i < n; ++i) {
    if (!t.at(i, i).empty()) rep.notes.push_back("[" + L.label(i) + "," + L.label(i) + "] != 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      SparseVec a = t.at(i, j), b = t.at(j, i);
      for (auto& [k, c] : b) c = -c;
      if (a != b)
        rep.notes.push_back("antisymmetry fails on (" + L.label(i) + "," + L.label(j) + ")");
    }
  }
  Vec acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
        add_bracket_right(t, t.at(i, j), k, 1, acc);
        add_bracket_right(t, t.at(j, k), i, 1, acc);
        add_bracket_right(t, t.at(k, i), j, 1, acc);
        if (!is_zero(acc)) {
          rep.failures.push_back({"jacobi", i, j, k, acc});
          acc.assign(n, Rational());
        }
      }
  return rep;
}

bool check_morphism(const LinMap& f) {
  const LieAlgebra& S = *f.source;
  const LieAlgebra& T = *f.target;
  if (f.matrix.rows() != T.dim() || f.matrix.cols() != S.dim()) return false;
  std::vector<Vec> img(S.dim());
  for (std::size_t i = 0; i < S.dim(); ++i) img[i] = f.matrix.col(i);
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = i + 1; j < S.dim(); ++j) {
      Vec lhs = f.apply(to_dense(S.bracket_basis(i, j), S.dim()));
      Vec rhs = T.bracket(img[i], img[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

bool check_iso(const LinMap& f) {
  return f.source->dim() == f.target->dim() && check_morphism(f) && inverse(f.matrix).has_value();
}

namespace {

std::shared_ptr<LieAlgebra> structure_on(const LieAlgebra& host, const std::vector<Vec>& vectors,
                                         const std::vector<std::string>& labels) {
  std::size_t m = vectors.size();
  Matrix cols = Matrix::from_cols(vectors, host.dim());
  auto sub = std::make_shared<LieAlgebra>(labels);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec br = host.bracket(vectors[i], vectors[j]);
      auto coords = solve(cols, br);
      if (!coords) throw InvalidInput("span is not closed under the bracket");
      sub->set_bracket(i, j, *coords);
    }
  return sub;
}

}  // namespace

Subalgebra subalgebra_on_basis(std::shared_ptr<const LieAlgebra> host,
                               const std::vector<Vec>& vectors,
                               const std::vector<std::string>& labels) {
  if (vectors.size() != labels.size()) throw InvalidInput("labels/vectors length mismatch");
  if (rank(Matrix::from_rows(vectors, host->dim())) != vectors.size())
    throw InvalidInput("subalgebra basis vectors are linearly dependent");
  Subalgebra s;
  s.basis = vectors;
  s.algebra = structure_on(*host, vectors, labels);
  s.inclusion = LinMap{s.algebra, host, Matrix::from_cols(vectors, host->dim())};
  if (!check_morphism(s.inclusion)) throw InvalidInput("inclusion is not a morphism");
  return s;
}

Subalgebra subalgebra_closure(std::shared_ptr<const LieAlgebra> host, const std::vector<Vec>& gens) {
  std::size_t n = host->dim();
  SpanIndex span(n);
  for (const auto& g : gens) span.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    auto cur = span.basis();
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (span.insert(host->bracket(cur[i], cur[j]))) grew = true;
  }
  auto basis = span.basis();
  auto pivots = span.pivots();
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    std::string l = host->label(pivots[r]);
    if (basis[r] != host->basis_vector(pivots[r])) l += "'";
    labels.push_back(l);
  }
  return subalgebra_on_basis(std::move(host), basis, labels);
}

std::string describe(const LieAlgebra& L, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational mag = v[i].abs();
    if (s.empty())
      s += v[i].sign() < 0 ? "-" : "";
    else
      s += v[i].sign() < 0 ? " - " : " + ";
    if (!mag.is_one()) s += mag.str() + "*";
    s += L.label(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace gapl
