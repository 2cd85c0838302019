#include <algorithm>
#include <map>

#include "doctest.h"
#include "gapl/errors.hpp"
#include "gapl/sl2rep.hpp"
#include "oracles.hpp"

using namespace gapl;
using namespace gapl::test;

namespace {

std::map<int, std::size_t> as_map(const RepDecomposition& d) {
  std::map<int, std::size_t> out;
  for (const auto& s : d.summands) out[s.highest_weight] += s.multiplicity;
  return out;
}

}  // namespace

TEST_CASE("standard irreps satisfy the relations") {
  for (int m = 0; m <= 10; ++m) {
    CAPTURE(m);
    Sl2Action a = make_standard_irrep(m);
    CHECK(a.dim == static_cast<std::size_t>(m + 1));
    CHECK(sl2_relation_failures(a).empty());
    auto d = decompose_rep(a);
    REQUIRE(d.summands.size() == 1);
    CHECK(d.summands[0].highest_weight == m);
    CHECK(d.summands[0].multiplicity == 1);
    auto w = weight_multiset(a);
    REQUIRE(w.size() == a.dim);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i] == Rational(m - 2 * static_cast<int>(i)));
      CHECK(w[i] == -w[w.size() - 1 - i]);
    }
  }
}

TEST_CASE("random direct sums decompose into their summands") {
  std::uniform_int_distribution<int> weight(0, 6);
  for (int trial = 0; trial < 25; ++trial) {
    std::map<int, std::size_t> expected;
    std::optional<Sl2Action> acc;
    for (;;) {
      int m = weight(rng());
      if ((acc ? acc->dim : 0) + m + 1 > 30) break;
      Sl2Action v = make_standard_irrep(m);
      acc = acc ? direct_sum(*acc, v) : v;
      ++expected[m];
    }
    REQUIRE(acc);
    Sl2Action a = scramble(*acc);
    REQUIRE(sl2_relation_failures(a).empty());
    auto d = decompose_rep(a);
    CHECK(as_map(d) == expected);
    for (const auto& s : d.summands) {
      CHECK(s.highest_weight_vectors.size() == s.multiplicity);
      for (const auto& v : s.highest_weight_vectors) {
        CHECK(is_zero(a.E * v));
        CHECK(a.H * v == scale(v, s.highest_weight));
      }
    }
    auto w = weight_multiset(a);
    auto rev = w;
    std::reverse(rev.begin(), rev.end());
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == -rev[i]);
  }
}

TEST_CASE("violated relations are named") {
  Sl2Action a = make_standard_irrep(2);
  a.H = 2 * a.H;
  auto f = sl2_relation_failures(a);
  CHECK_FALSE(f.empty());
  CHECK_THROWS_AS(decompose_rep(a), InvalidInput);
  Sl2Action b = make_standard_irrep(1);
  b.E = Matrix(3, 3);
  CHECK_FALSE(sl2_relation_failures(b).empty());
}
