#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gapl/rational.hpp"

namespace gapl {

class VarRegistry {
 public:
  explicit VarRegistry(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using VarsPtr = std::shared_ptr<const VarRegistry>;
using Exponent = std::vector<std::uint16_t>;

unsigned total_degree(const Exponent& e);
// graded reverse lexicographic, variable 0 largest
bool degrevlex_less(const Exponent& a, const Exponent& b);

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarsPtr vars);
  MultiPoly(VarsPtr vars, const Rational& c);
  static MultiPoly variable(VarsPtr vars, std::size_t v);
  static MultiPoly variable(VarsPtr vars, std::string_view name);

  const VarsPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned degree() const;
  unsigned degree_in(std::size_t v) const;
  std::vector<std::size_t> variables() const;
  bool has_constant_term() const { return !constant_term().is_zero(); }

  // leading term with respect to degrevlex
  std::pair<Exponent, Rational> leading_term() const;
  MultiPoly monic() const;

  // coefficient of v^d, as a polynomial in the remaining variables
  MultiPoly coefficient_of(std::size_t v, unsigned d) const;

  MultiPoly substitute(std::size_t v, const MultiPoly& value) const;
  MultiPoly substitute(const std::map<std::size_t, MultiPoly>& subs) const;
  Rational evaluate(const std::map<std::size_t, Rational>& point) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

  MultiPoly pow(unsigned k) const;

  // terms printed in descending degrevlex order, e.g. "2*a*b^2 - 1/2*c + 3"
  std::string str() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  void adopt_vars(const MultiPoly& o);

  VarsPtr vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// exact quotient p/d, or nothing when d does not divide p
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& d);

// polynomial square root, when p is a perfect square
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

struct Factorization {
  Rational unit{1};
  std::vector<MultiPoly> factors;  // monic, sorted
  bool irreducible = false;
};

// splits p, of degree <= 2 in v, into rational factors linear in v
Factorization factor_univariate_in(const MultiPoly& p, std::size_t v);

}  // namespace gapl
