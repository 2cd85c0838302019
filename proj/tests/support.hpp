#pragma once

#include <random>

#include "gapl/poly.hpp"

namespace gapl::test {

inline VarsPtr registry(std::vector<std::string> names) {
  return std::make_shared<const VarRegistry>(std::move(names));
}

inline MultiPoly var(const VarsPtr& v, const char* name) { return MultiPoly::variable(v, name); }
inline MultiPoly cst(const VarsPtr& v, const Rational& c) { return MultiPoly(v, c); }

// fixed seed so failures reproduce
inline std::mt19937& rng() {
  static std::mt19937 g(20240917);
  return g;
}

inline Rational small_rational(int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  return Rational(num(rng()), den(rng()));
}

}  // namespace gapl::test
