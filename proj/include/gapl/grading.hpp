#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gapl/lie.hpp"

namespace gapl {

struct Component {
  Vec functional;          // values on the Cartan basis
  std::vector<Vec> basis;  // canonical basis of the component
};

struct RootDatum {
  std::vector<Vec> cartan;
  std::vector<Component> components;  // zero component first
  std::map<Vec, std::size_t> lookup;
  // set when every component basis vector is a standard basis vector
  bool adapted = false;
  std::vector<std::size_t> basis_component;  // component of each basis vector, if adapted

  std::size_t dim() const;
  const Component* find(const Vec& functional) const;
  const Component& zero() const { return components.front(); }
  // functional of v when v lies in a single component
  std::optional<Vec> weight_of(const Vec& v) const;
  bool is_root(const Vec& functional) const;  // nonzero and present
  std::size_t root_count() const { return components.size() - 1; }
};

RootDatum root_decomposition(const LieAlgebra& L, const std::vector<Vec>& cartan);

// every product of component basis vectors lands in the sum component
bool check_graded_product(const BilinearTable& product, const RootDatum& datum);

// eigenvalues (with multiplicity) and eigenspaces of a matrix with rational spectrum;
// throws when the spectrum is not rational or the matrix is not diagonalizable
struct Eigenspace {
  Rational value;
  std::vector<Vec> basis;
};
std::vector<Eigenspace> rational_eigenspaces(const Matrix& m);

}  // namespace gapl
