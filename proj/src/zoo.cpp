#include "gapl/zoo.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "gapl/errors.hpp"

namespace gapl {

MatrixRealization::MatrixRealization(std::size_t size, int offset, std::vector<Matrix> basis)
    : size_(size), offset_(offset), basis_(std::move(basis)) {
  std::size_t d = basis_.size();
  std::vector<Vec> rows;
  for (const auto& b : basis_) rows.push_back(b.data());
  Echelon e = rref(Matrix::from_rows(rows, size_ * size_));
  if (e.pivots.size() != d) throw InvalidInput("matrix basis is linearly dependent");
  positions_ = e.pivots;
  Matrix sub(d, d);  // sub(r, c) = basis_c at position r
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) sub(r, c) = basis_[c].data()[positions_[r]];
  auto inv = inverse(sub);
  if (!inv) throw InvalidInput("matrix basis coordinate system is singular");
  solver_ = *inv;
}

Matrix MatrixRealization::unit(int i, int j) const {
  Matrix m(size_, size_);
  int a = i - offset_, b = j - offset_;
  if (a < 0 || b < 0 || a >= static_cast<int>(size_) || b >= static_cast<int>(size_))
    throw InvalidInput("matrix unit index out of range");
  m(a, b) = 1;
  return m;
}

Vec MatrixRealization::coords(const Matrix& m) const {
  if (m.rows() != size_ || m.cols() != size_) throw InvalidInput("matrix size mismatch");
  Vec at(positions_.size());
  for (std::size_t r = 0; r < positions_.size(); ++r) at[r] = m.data()[positions_[r]];
  Vec c = solver_ * at;
  Matrix back(size_, size_);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) back = back + c[k] * basis_[k];
  if (!(back == m)) throw InvalidInput("matrix does not lie in the algebra");
  return c;
}

bool MatrixRealization::contains(const Matrix& m) const {
  try {
    coords(m);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

namespace {

std::string idx(int i, int j, int size_hint) {
  if (size_hint <= 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

struct Term {
  int coef, i, j;
};

std::string combo_label(const std::vector<Term>& ts, int size_hint) {
  std::string s;
  for (const auto& t : ts) {
    if (!s.empty() || t.coef < 0) s += t.coef < 0 ? "-" : "+";
    int a = std::abs(t.coef);
    if (a != 1) s += std::to_string(a);
    s += "e" + idx(t.i, t.j, size_hint);
  }
  return s;
}

}  // namespace

ClassicalAlgebra make_classical(char family, int n) {
  int min_rank = family == 'A' ? 1 : family == 'B' ? 2 : family == 'C' ? 3 : family == 'D' ? 4 : -1;
  if (min_rank < 0) throw InvalidInput(std::string("unknown classical family '") + family + "'");
  if (n < min_rank)
    throw InvalidInput(std::string("rank ") + std::to_string(n) + " below minimum " +
                       std::to_string(min_rank) + " for family " + family);
  ClassicalAlgebra out;
  out.family = family;
  out.rank = n;
  int size = family == 'A' ? n + 1 : family == 'B' ? 2 * n + 1 : 2 * n;
  int offset = family == 'B' ? 0 : 1;
  std::vector<std::vector<Term>> elems;
  std::vector<std::string> labels;
  auto push = [&](std::vector<Term> ts, std::string label = "") {
    if (label.empty()) label = combo_label(ts, size);
    labels.push_back(std::move(label));
    elems.push_back(std::move(ts));
  };
  if (family == 'A') {
    for (int k = 1; k <= n; ++k) push({{1, k, k}, {-1, k + 1, k + 1}}, "h" + std::to_string(k));
    for (int i = 1; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j) push({{1, i, j}}, "e" + idx(i, j, size));
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; j < i; ++j) push({{1, i, j}}, "e" + idx(i, j, size));
  } else {
    for (int k = 1; k <= n; ++k) push({{1, k, k}, {-1, n + k, n + k}}, "h" + std::to_string(k));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) push({{1, i, j}, {-1, n + j, n + i}});
    int s = family == 'C' ? 1 : -1;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) push({{1, i, n + j}, {s, j, n + i}});
    if (family == 'C')
      for (int i = 1; i <= n; ++i) push({{1, i, n + i}});
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) push({{1, n + i, j}, {s, n + j, i}});
    if (family == 'C')
      for (int i = 1; i <= n; ++i) push({{1, n + i, i}});
    if (family == 'B') {
      for (int i = 1; i <= n; ++i) push({{2, i, 0}, {-1, 0, n + i}});
      for (int i = 1; i <= n; ++i) push({{1, 0, i}, {-2, n + i, 0}});
    }
  }
  std::vector<Matrix> mats;
  for (const auto& ts : elems) {
    Matrix m(size, size);
    for (const auto& t : ts) m(t.i - offset, t.j - offset) += t.coef;
    mats.push_back(std::move(m));
  }
  if (family != 'A') {
    Matrix J(size, size);
    if (family == 'B') {
      J(0, 0) = 2;
      for (int i = 1; i <= n; ++i) J(i, n + i) = J(n + i, i) = 1;
    } else {
      for (int i = 0; i < n; ++i) {
        J(i, n + i) = 1;
        J(n + i, i) = family == 'C' ? -1 : 1;
      }
    }
    for (std::size_t k = 0; k < mats.size(); ++k)
      if (!(mats[k].transpose() * J + J * mats[k]).is_zero())
        throw InvalidInput("basis element " + labels[k] + " violates the invariant form");
    out.form = J;
  }
  out.realization = MatrixRealization(size, offset, mats);
  auto L = std::make_shared<LieAlgebra>(labels);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      L->set_bracket(i, j, out.realization.coords(commutator(mats[i], mats[j])));
  out.algebra = L;
  for (int k = 0; k < n; ++k) out.cartan.push_back(k);
  return out;
}

void check_cartan_matrix(const CartanMatrix& c) {
  std::size_t n = c.rank();
  if (n == 0) throw InvalidInput("empty Cartan matrix");
  for (const auto& row : c.entries)
    if (row.size() != n) throw InvalidInput("Cartan matrix not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && c(i, j) != 2) throw InvalidInput("Cartan matrix diagonal must be 2");
      if (i != j && c(i, j) > 0) throw InvalidInput("Cartan matrix off-diagonal must be <= 0");
      if (i != j && (c(i, j) == 0) != (c(j, i) == 0))
        throw InvalidInput("Cartan matrix zero pattern not symmetric");
    }
}

CartanMatrix cartan_matrix(char type, int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto link = [&](int a, int b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
  switch (type) {
    case 'A':
      if (n < 1) throw InvalidInput("A_n needs n >= 1");
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw InvalidInput("B_n/C_n need n >= 2");
      for (int i = 1; i < n; ++i) link(i, i + 1);
      // B: alpha_n short, so alpha_{n-1}(h_n) = -2
      if (type == 'B')
        m[n - 1][n - 2] = -2;
      else
        m[n - 2][n - 1] = -2;
      break;
    case 'D':
      if (n < 4) throw InvalidInput("D_n needs n >= 4");
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      if (n == 6) {
        link(1, 2), link(2, 3), link(3, 4), link(3, 5), link(5, 6);
      } else if (n == 7) {
        for (int i = 1; i < 6; ++i) link(i, i + 1);
        link(4, 7);
      } else if (n == 8) {
        for (int i = 1; i < 7; ++i) link(i, i + 1);
        link(5, 8);
      } else {
        throw InvalidInput("E_n needs n in {6,7,8}");
      }
      break;
    case 'F':
      if (n != 4) throw InvalidInput("F_n needs n = 4");
      link(1, 2), link(2, 3), link(3, 4);
      m[2][1] = -2;
      break;
    case 'G':
      if (n != 2) throw InvalidInput("G_n needs n = 2");
      m[0][1] = -1;
      m[1][0] = -3;
      break;
    default:
      throw InvalidInput(std::string("unknown Cartan type '") + type + "'");
  }
  CartanMatrix c{m};
  check_cartan_matrix(c);
  return c;
}

namespace {

int pairing(const CartanMatrix& c, const Root& beta, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * c(i, j);
  return s;
}

Root neg(const Root& r) {
  Root o = r;
  for (auto& x : o) x = -x;
  return o;
}

Root plus(const Root& a, const Root& b) {
  Root o = a;
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += b[i];
  return o;
}

bool is_positive(const Root& r) {
  for (int x : r)
    if (x != 0) return x > 0;
  return false;
}

int height(const Root& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

std::string root_label(const Root& r, bool positive) {
  int h = std::abs(height(r));
  std::string s = positive ? "e" : "f";
  bool compact = r.size() < 10;
  for (int x : r) compact = compact && std::abs(x) < 10;
  if (h == 1) {
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) return s + std::to_string(i + 1);
  }
  if (compact) {
    for (int x : r) s += std::to_string(std::abs(x));
    return s;
  }
  s += "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(std::abs(r[i]));
  return s + ")";
}

}  // namespace

std::vector<Root> positive_roots(const CartanMatrix& c, std::size_t bound) {
  check_cartan_matrix(c);
  std::size_t n = c.rank();
  std::set<Root> seen;
  std::vector<Root> level, all;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    level.push_back(r);
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), std::greater<Root>());
    for (const auto& r : level) {
      seen.insert(r);
      all.push_back(r);
    }
    if (2 * all.size() > bound)
      throw InvalidInput("root closure exceeded bound; Cartan matrix is not of finite type");
    std::set<Root> next;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int q = p - pairing(c, beta, i);
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    level.assign(next.begin(), next.end());
  }
  return all;
}

std::size_t ChevalleyData::e(std::size_t i) const {
  Root r(cartan.rank(), 0);
  r.at(i) = 1;
  return root_vector_index.at(r);
}

std::size_t ChevalleyData::f(std::size_t i) const {
  Root r(cartan.rank(), 0);
  r.at(i) = -1;
  return root_vector_index.at(r);
}

ChevalleyData make_from_cartan_matrix(const CartanMatrix& c, std::size_t bound) {
  std::size_t n = c.rank();
  std::vector<Root> pos = positive_roots(c, bound);
  ChevalleyData data;
  data.cartan = c;

  // (alpha_i, alpha_j) = C_ij * D_i with D_i = (alpha_i, alpha_i)/2
  std::vector<Rational> D(n);
  std::vector<bool> done(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    D[s] = 1;
    done[s] = true;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || c(i, j) == 0) continue;
        Rational dj = D[i] * Rational(c(i, j)) / Rational(c(j, i));
        if (!done[j]) {
          D[j] = dj;
          done[j] = true;
          q.push(j);
        } else if (D[j] != dj) {
          throw InvalidInput("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Rational dmin = *std::min_element(D.begin(), D.end());
  for (auto& d : D) d /= dmin;
  data.half_norms = D;
  auto form = [&](const Root& a, const Root& b) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[j] != 0) s += Rational(a[i] * b[j] * c(i, j)) * D[i];
    }
    return s;
  };

  std::map<Root, std::size_t> pos_index;
  for (std::size_t k = 0; k < pos.size(); ++k) pos_index[pos[k]] = k;
  std::set<Root> phi;
  for (const auto& r : pos) {
    phi.insert(r);
    phi.insert(neg(r));
  }
  auto is_root = [&](const Root& r) { return phi.count(r) > 0; };
  auto string_down = [&](const Root& a, const Root& b) {
    // largest p with b - p a a root
    int p = 0;
    Root r = b;
    while (true) {
      for (std::size_t i = 0; i < n; ++i) r[i] -= a[i];
      if (!is_root(r)) break;
      ++p;
    }
    return p;
  };

  std::map<std::pair<Root, Root>, Rational> memo;
  std::function<Rational(const Root&, const Root&)> N = [&](const Root& a, const Root& b) -> Rational {
    Root s = plus(a, b);
    if (!is_root(s)) return Rational();
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational val;
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) {
      if (pos_index.at(a) > pos_index.at(b)) {
        val = -N(b, a);
      } else {
        // extraspecial pair of xi = a + b
        const Root& xi = s;
        Root alpha, beta;
        for (const auto& r : pos) {
          Root rest = xi;
          for (std::size_t i = 0; i < n; ++i) rest[i] -= r[i];
          if (pos_index.count(rest)) {
            alpha = r;
            beta = rest;
            break;
          }
        }
        Rational nab(string_down(alpha, beta) + 1);
        if (a == alpha) {
          val = nab;
        } else {
          const Root& g = a;
          const Root& d = b;
          Root mg = neg(g), md = neg(d);
          Rational t;
          Root bg = plus(beta, mg), ag = plus(alpha, mg);
          if (is_root(bg)) t += N(beta, mg) * N(alpha, md) / form(bg, bg);
          if (is_root(ag)) t += N(mg, alpha) * N(beta, md) / form(ag, ag);
          val = form(xi, xi) / nab * t;
        }
      }
    } else if (!pa && !pb) {
      val = -N(neg(a), neg(b));
    } else if (pa && !pb) {
      const Root& th = s;
      if (is_positive(th))
        val = -(form(th, th) / form(a, a)) * N(neg(b), th);
      else
        val = (form(th, th) / form(b, b)) * N(neg(th), a);
    } else {
      val = -N(b, a);
    }
    if (!val.is_integer() || val.is_zero())
      throw InvalidInput("structure constant construction produced a non-integral value");
    memo.emplace(key, val);
    return val;
  };

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i + 1));
  std::vector<Root> order;
  for (const auto& r : pos) order.push_back(r);
  for (const auto& r : pos) order.push_back(neg(r));
  for (std::size_t k = 0; k < order.size(); ++k) {
    labels.push_back(root_label(order[k], k < pos.size()));
    data.root_vector_index[order[k]] = n + k;
  }
  data.roots = order;
  for (std::size_t i = 0; i < n; ++i) data.coroot_index.push_back(i);

  auto L = std::make_shared<LieAlgebra>(labels);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) {
      int v = pairing(c, order[k], i);
      if (v) L->set_bracket(i, n + k, SparseVec{{n + k, Rational(v)}});
    }
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      Root s = plus(order[a], order[b]);
      bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
      if (zero) {
        const Root& r = order[a];  // positive, since positives come first
        Rational dr = form(r, r) / Rational(2);
        SparseVec hv;
        for (std::size_t i = 0; i < n; ++i)
          if (r[i]) hv.emplace_back(i, Rational(r[i]) * D[i] / dr);
        L->set_bracket(n + a, n + b, hv);
      } else if (is_root(s)) {
        L->set_bracket(n + a, n + b, SparseVec{{data.root_vector_index.at(s), N(order[a], order[b])}});
      }
    }
  data.algebra = L;
  return data;
}

std::shared_ptr<const LieAlgebra> make_bn(int n) {
  if (n < 2) throw InvalidInput("b_n needs n >= 2");
  std::vector<std::string> labels = {"x", "y"};
  for (int k = 1; k <= n; ++k) labels.push_back("z" + std::to_string(k));
  auto L = std::make_shared<LieAlgebra>(labels);
  const std::size_t x = 0, y = 1, z1 = 2, z2 = 3;
  L->set_bracket(z1, x, SparseVec{{x, Rational(2)}});
  L->set_bracket(z1, y, SparseVec{{y, Rational(-2)}});
  L->set_bracket(x, y, SparseVec{{z1, Rational(1)}});
  L->set_bracket(z2, x, SparseVec{{x, Rational(-1)}});
  L->set_bracket(z2, y, SparseVec{{y, Rational(1)}});
  return L;
}

std::vector<Vec> AlgebraHandle::cartan_vectors() const {
  std::vector<Vec> out;
  for (auto i : cartan) out.push_back(algebra->basis_vector(i));
  return out;
}

namespace {

int parse_suffix(const std::string& id, std::size_t from) {
  if (from >= id.size()) throw InvalidInput("malformed algebra id '" + id + "'");
  for (std::size_t i = from; i < id.size(); ++i)
    if (id[i] < '0' || id[i] > '9') throw InvalidInput("malformed algebra id '" + id + "'");
  if (id.size() - from > 4) throw InvalidInput("algebra size too large in '" + id + "'");
  return std::stoi(id.substr(from));
}

}  // namespace

AlgebraHandle make_algebra(const std::string& id) {
  AlgebraHandle h;
  h.id = id;
  auto classical = [&](char fam, int n) {
    h.classical = make_classical(fam, n);
    h.algebra = h.classical->algebra;
    h.cartan = h.classical->cartan;
  };
  auto chevalley = [&](char type, int n) {
    h.chevalley = make_from_cartan_matrix(cartan_matrix(type, n));
    h.algebra = h.chevalley->algebra;
    h.cartan = h.chevalley->coroot_index;
  };
  if (id.rfind("sl", 0) == 0) {
    int k = parse_suffix(id, 2);
    if (k < 2) throw InvalidInput("sl<k> needs k >= 2");
    classical('A', k - 1);
  } else if (id.rfind("so", 0) == 0) {
    int k = parse_suffix(id, 2);
    if (k % 2 == 1) {
      if (k < 5) throw InvalidInput("so<2n+1> needs n >= 2");
      classical('B', (k - 1) / 2);
    } else {
      if (k < 8) throw InvalidInput("so<2n> needs n >= 4");
      classical('D', k / 2);
    }
  } else if (id.rfind("sp", 0) == 0) {
    int k = parse_suffix(id, 2);
    if (k % 2 == 1 || k < 6) throw InvalidInput("sp<2n> needs n >= 3");
    classical('C', k / 2);
  } else if (id == "e6" || id == "e7" || id == "e8") {
    chevalley('E', id[1] - '0');
  } else if (id == "f4") {
    chevalley('F', 4);
  } else if (id == "g2") {
    chevalley('G', 2);
  } else if (id.size() >= 2 && std::string("ABCDEFG").find(id[0]) != std::string::npos) {
    chevalley(id[0], parse_suffix(id, 1));
  } else if (id.size() >= 2 && id[0] == 'b') {
    int n = parse_suffix(id, 1);
    h.algebra = make_bn(n);
    for (int k = 0; k < n; ++k) h.cartan.push_back(2 + k);
  } else {
    throw InvalidInput("unknown algebra id '" + id + "'");
  }
  return h;
}

}  // namespace gapl
