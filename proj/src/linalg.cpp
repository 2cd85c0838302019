#include "gapl/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "gapl/errors.hpp"

namespace gapl {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

static void check_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
}

Vec add(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Vec& a, const Rational& c) {
  Vec out = a;
  for (auto& x : out) x *= c;
  return out;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  check_len(x, y);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Rational dot(const Vec& a, const Vec& b) {
  check_len(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return gapl::is_zero(a_); }

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw InvalidInput("matrix shape mismatch");
  Matrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.c_ != v.size()) throw InvalidInput("matrix-vector shape mismatch");
  Vec out(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw InvalidInput("matrix shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw InvalidInput("matrix shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.a_) x *= c;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw InvalidInput("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t dim) {
  SpanIndex s(dim);
  for (const auto& v : vs) s.insert(v);
  return s.basis();
}

Vec SpanIndex::reduce(const Vec& v) const {
  if (v.size() != dim_) throw InvalidInput("span: vector length mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = r[piv_[k]];
    if (c.is_zero()) continue;
    Rational f = c;
    axpy(r, -f, rows_[k]);
  }
  return r;
}

bool SpanIndex::insert(const Vec& v) {
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  r = scale(r, r[p].inv());
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Rational f = row[p];
    axpy(row, -f, r);
  }
  rows_.push_back(std::move(r));
  piv_.push_back(p);
  return true;
}

std::vector<std::size_t> SpanIndex::pivots() const {
  std::vector<std::size_t> p = piv_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vec> SpanIndex::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return piv_[a] < piv_[b]; });
  std::vector<Vec> out;
  for (auto k : order) out.push_back(rows_[k]);
  return out;
}

std::vector<Rational> charpoly(const Matrix& m0) {
  if (m0.rows() != m0.cols()) throw InvalidInput("charpoly: matrix not square");
  std::size_t n = m0.rows();
  Matrix h = m0;
  // reduce to upper Hessenberg form by similarity
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t p = k + 1;
    while (p < n && h(p, k).is_zero()) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k).is_zero()) continue;
      Rational f = h(i, k) / h(k + 1, k);
      for (std::size_t j = 0; j < n; ++j)
        if (!h(k + 1, j).is_zero()) h(i, j) -= f * h(k + 1, j);
      for (std::size_t r = 0; r < n; ++r)
        if (!h(r, i).is_zero()) h(r, k + 1) += f * h(r, i);
    }
  }
  // p_k = charpoly of leading k x k block
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> cur(k + 1);
    // (t - h_kk) p_{k-1}
    for (std::size_t d = 0; d < k; ++d) {
      cur[d + 1] += p[k - 1][d];
      cur[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Rational prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      Rational f = prod * h(i, k - 1);
      if (f.is_zero()) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) cur[d] -= f * p[i][d];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

}  // namespace gapl
