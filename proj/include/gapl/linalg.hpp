#pragma once

#include <optional>
#include <vector>

#include "gapl/rational.hpp"

namespace gapl {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& c);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c*x
Rational dot(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  const Vec& data() const { return a_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  Vec a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// reduced row echelon form; pivot rows come first
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// canonical kernel basis: one vector per free column, with a 1 there
std::vector<Vec> kernel(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// canonical RREF basis of the span of the given vectors
std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t dim);

// Incrementally maintained fully reduced row echelon basis.
class SpanIndex {
 public:
  explicit SpanIndex(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  // returns false when v was already in the span
  bool insert(const Vec& v);
  // canonical basis, sorted by pivot
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

// coefficients c_0..c_n (c_n = 1) of det(tI - m)
std::vector<Rational> charpoly(const Matrix& m);

}  // namespace gapl
