#include "gapl/sl2rep.hpp"

#include <algorithm>

#include "gapl/errors.hpp"

namespace gapl {

std::vector<std::string> sl2_relation_failures(const Sl2Action& a) {
  std::vector<std::string> out;
  auto sq = [&](const Matrix& m) { return m.rows() == a.dim && m.cols() == a.dim; };
  if (!sq(a.E) || !sq(a.F) || !sq(a.H)) {
    out.push_back("matrix shape does not match dim");
    return out;
  }
  if (!(commutator(a.H, a.E) == Rational(2) * a.E)) out.push_back("HE - EH != 2E");
  if (!(commutator(a.H, a.F) == Rational(-2) * a.F)) out.push_back("HF - FH != -2F");
  if (!(commutator(a.E, a.F) == a.H)) out.push_back("EF - FE != H");
  return out;
}

Sl2Action make_standard_irrep(int m) {
  if (m < 0) throw InvalidInput("highest weight must be nonnegative");
  std::size_t d = static_cast<std::size_t>(m) + 1;
  Sl2Action a{d, Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  for (int i = 0; i <= m; ++i) {
    a.H(i, i) = m - 2 * i;
    if (i < m) a.F(i + 1, i) = i + 1;
    if (i > 0) a.E(i - 1, i) = m - i + 1;
  }
  return a;
}

Sl2Action direct_sum(const Sl2Action& a, const Sl2Action& b) {
  std::size_t d = a.dim + b.dim;
  Sl2Action s{d, Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  auto place = [&](Matrix& dst, const Matrix& x, const Matrix& y) {
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) dst(i, j) = x(i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) dst(a.dim + i, a.dim + j) = y(i, j);
  };
  place(s.E, a.E, b.E);
  place(s.F, a.F, b.F);
  place(s.H, a.H, b.H);
  return s;
}

RepDecomposition decompose_rep(const Sl2Action& a) {
  auto bad = sl2_relation_failures(a);
  if (!bad.empty()) throw InvalidInput("not an sl2 representation: " + bad.front());
  RepDecomposition out;
  std::size_t covered = 0;
  std::size_t d = a.dim;
  for (int m = static_cast<int>(d) - 1; m >= 0; --m) {
    // ker E intersected with ker (H - m)
    Matrix stacked(2 * d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        stacked(i, j) = a.E(i, j);
        stacked(d + i, j) = a.H(i, j) - (i == j ? Rational(m) : Rational(0));
      }
    auto ker = kernel(stacked);
    if (ker.empty()) continue;
    Summand s;
    s.highest_weight = m;
    s.highest_weight_vectors = span_basis(ker, d);
    s.multiplicity = s.highest_weight_vectors.size();
    covered += s.multiplicity * static_cast<std::size_t>(m + 1);
    out.summands.push_back(std::move(s));
  }
  if (covered != d)
    throw InvalidInput("H is not diagonalizable over the rationals; decomposition incomplete");
  return out;
}

std::vector<Rational> weight_multiset(const Sl2Action& a) {
  std::vector<Rational> w;
  long bound = static_cast<long>(a.dim);
  for (long l = bound; l >= -bound; --l) {
    Matrix s = a.H;
    for (std::size_t i = 0; i < a.dim; ++i) s(i, i) -= Rational(l);
    std::size_t k = kernel(s).size();
    for (std::size_t t = 0; t < k; ++t) w.emplace_back(l);
  }
  if (w.size() != a.dim) throw InvalidInput("H has non-integral or defective weights");
  return w;
}

}  // namespace gapl
