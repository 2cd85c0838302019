#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gapl/lie.hpp"

namespace gapl {

// Matrix Lie algebra with rows numbered from `offset`.
class MatrixRealization {
 public:
  MatrixRealization() = default;
  MatrixRealization(std::size_t size, int offset, std::vector<Matrix> basis);

  std::size_t size() const { return size_; }
  int offset() const { return offset_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  Matrix unit(int i, int j) const;  // e_ij in this numbering
  // coordinates of m in the basis; throws when m is not in the algebra
  Vec coords(const Matrix& m) const;
  bool contains(const Matrix& m) const;

 private:
  std::size_t size_ = 0;
  int offset_ = 0;
  std::vector<Matrix> basis_;
  std::vector<std::size_t> positions_;
  Matrix solver_;
};

struct ClassicalAlgebra {
  char family = 'A';
  int rank = 0;
  std::shared_ptr<const LieAlgebra> algebra;
  std::vector<std::size_t> cartan;
  MatrixRealization realization;
  Matrix form;  // X^T J + J X = 0 (empty for type A)
};

ClassicalAlgebra make_classical(char family, int n);

struct CartanMatrix {
  std::vector<std::vector<int>> entries;
  std::size_t rank() const { return entries.size(); }
  int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

void check_cartan_matrix(const CartanMatrix& c);
// [h_i, e_j] = C_ij e_j; for E7/E8 node 1 is an end node adjacent to node 2
CartanMatrix cartan_matrix(char type, int n);

using Root = std::vector<int>;

struct ChevalleyData {
  std::shared_ptr<const LieAlgebra> algebra;
  CartanMatrix cartan;
  std::vector<Root> roots;  // positive roots by height, then their negatives
  std::map<Root, std::size_t> root_vector_index;
  std::vector<std::size_t> coroot_index;
  std::vector<Rational> half_norms;  // (alpha_i, alpha_i)/2 per simple root

  std::size_t e(std::size_t i) const;
  std::size_t f(std::size_t i) const;
  std::size_t h(std::size_t i) const { return coroot_index.at(i); }
  std::size_t positive_count() const { return roots.size() / 2; }
};

// positive roots by root-string closure; throws past the bound
std::vector<Root> positive_roots(const CartanMatrix& c, std::size_t bound = 300);
ChevalleyData make_from_cartan_matrix(const CartanMatrix& c, std::size_t bound = 300);

std::shared_ptr<const LieAlgebra> make_bn(int n);

struct AlgebraHandle {
  std::string id;
  std::shared_ptr<const LieAlgebra> algebra;
  std::vector<std::size_t> cartan;
  std::optional<ClassicalAlgebra> classical;
  std::optional<ChevalleyData> chevalley;
  std::vector<Vec> cartan_vectors() const;
};

// "sl<k>", "so<k>", "sp<k>", "e6", "e7", "e8", "f4", "g2", "b<n>"
AlgebraHandle make_algebra(const std::string& id);

}  // namespace gapl
