#pragma once

// Reference data computed without the library's own constructions.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gapl/refutation.hpp"
#include "gapl/sl2rep.hpp"
#include "gapl/zoo.hpp"
#include "support.hpp"

namespace gapl::test {

// Weyl orbit of the simple roots; every root of a reduced system is conjugate to a simple one
inline std::size_t orbit_root_count(const CartanMatrix& c) {
  const std::size_t r = c.rank();
  std::set<std::vector<int>> seen, frontier;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> a(r, 0);
    a[i] = 1;
    frontier.insert(a);
  }
  while (!frontier.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& b : frontier) {
      if (!seen.insert(b).second) continue;
      for (std::size_t i = 0; i < r; ++i) {
        int pairing = 0;  // b(h_i)
        for (std::size_t j = 0; j < r; ++j) pairing += b[j] * c(i, j);
        std::vector<int> s = b;
        s[i] -= pairing;
        if (!seen.count(s)) next.insert(s);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::size_t expected_root_count(char type, int n) {
  switch (type) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'G': return 12;
    case 'F': return 48;
    default: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
}

// the forced products on b_n, written out by hand
inline std::map<std::string, Rational> expected_forced(int n) {
  std::map<std::string, Rational> out;
  std::vector<std::string> z;
  for (int k = 1; k <= n; ++k) z.push_back("z" + std::to_string(k));
  auto set = [&](const std::string& a, const std::string& b, const std::string& c, Rational v) {
    out[slot_label(a, b, c)] = v;
  };
  set("z1", "x", "x", -2);
  set("x", "z1", "x", -4);
  set("z1", "y", "y", 2);
  set("y", "z1", "y", 4);
  set("z2", "x", "x", 1);
  set("x", "z2", "x", 2);
  set("z2", "y", "y", -1);
  set("y", "z2", "y", -2);
  for (int j = 3; j <= n; ++j) {
    set(z[j - 1], "x", "x", 0);
    set("x", z[j - 1], "x", 0);
    set(z[j - 1], "y", "y", 0);
    set("y", z[j - 1], "y", 0);
  }
  for (const auto& k : z) {
    set("x", "y", k, k == "z1" ? Rational(1, 2) : Rational(0));
    set("y", "x", k, k == "z1" ? Rational(-1, 2) : Rational(0));
  }
  for (const auto& i : z)
    for (const auto& k : z) {
      set("z1", i, k, 0);
      set(i, "z1", k, 0);
    }
  return out;
}

// (z_p o z_q)[z_k] for p, q >= 2
inline std::set<std::string> expected_unforced(int n) {
  std::set<std::string> out;
  for (int p = 2; p <= n; ++p)
    for (int q = 2; q <= n; ++q)
      for (int k = 1; k <= n; ++k)
        out.insert(slot_label("z" + std::to_string(p), "z" + std::to_string(q), "z" + std::to_string(k)));
  return out;
}

// conjugate by a random invertible change of basis
inline Sl2Action scramble(const Sl2Action& a) {
  const std::size_t n = a.dim;
  for (;;) {
    Matrix p = Matrix::identity(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    for (int k = 0; k < 3 * static_cast<int>(n); ++k) {
      std::size_t i = pick(rng()), j = pick(rng());
      if (i != j) p(i, j) += small_rational(2);
    }
    if (auto inv = inverse(p)) return {n, p * a.E * *inv, p * a.F * *inv, p * a.H * *inv};
  }
}

}  // namespace gapl::test
