#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gapl/linalg.hpp"

namespace gapl {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t dim);

// Full dim x dim table of basis products, no symmetry assumed.
class BilinearTable {
 public:
  BilinearTable() = default;
  explicit BilinearTable(std::size_t dim) : dim_(dim), t_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const SparseVec& at(std::size_t i, std::size_t j) const { return t_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, SparseVec v);
  void set(std::size_t i, std::size_t j, const Vec& v) { set(i, j, to_sparse(v)); }
  Vec apply(const Vec& u, const Vec& v) const;
  // matrix of w -> u*w
  Matrix left_mult(const Vec& u) const;
  // matrix of w -> w*u
  Matrix right_mult(const Vec& u) const;
  friend bool operator==(const BilinearTable& a, const BilinearTable& b) {
    return a.dim_ == b.dim_ && a.t_ == b.t_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec> t_;
};

struct TripleFailure {
  std::string axiom;
  std::size_t i, j, k;
  Vec residual;
};

struct ValidationReport {
  std::vector<TripleFailure> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty() && notes.empty(); }
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::vector<std::string> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index(const std::string& label) const;
  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i); }
  Vec vec(const std::string& label) const { return basis_vector(index(label)); }

  // sets [b_i, b_j] = v and [b_j, b_i] = -v
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  void set_bracket(std::size_t i, std::size_t j, SparseVec v);
  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_.at(i, j); }
  Vec bracket(const Vec& u, const Vec& v) const;
  Matrix ad(const Vec& u) const { return table_.left_mult(u); }
  const BilinearTable& table() const { return table_; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.basis_ == b.basis_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> basis_;
  BilinearTable table_;
};

ValidationReport validate_lie(const LieAlgebra& L);

Vec bracket(const LieAlgebra& L, const Vec& u, const Vec& v);

struct LinMap {
  std::shared_ptr<const LieAlgebra> source;
  std::shared_ptr<const LieAlgebra> target;
  Matrix matrix;  // dim(target) x dim(source)
  Vec apply(const Vec& v) const { return matrix * v; }
};

bool check_morphism(const LinMap& f);
bool check_iso(const LinMap& f);

struct Subalgebra {
  std::vector<Vec> basis;  // canonical RREF basis in host coordinates
  std::shared_ptr<const LieAlgebra> algebra;
  LinMap inclusion;
};

Subalgebra subalgebra_closure(std::shared_ptr<const LieAlgebra> host, const std::vector<Vec>& gens);

// structure constants of the span of the given vectors, which must be a
// closed subalgebra, in exactly that basis
Subalgebra subalgebra_on_basis(std::shared_ptr<const LieAlgebra> host,
                               const std::vector<Vec>& vectors,
                               const std::vector<std::string>& labels);

std::string describe(const LieAlgebra& L, const Vec& v);

}  // namespace gapl
