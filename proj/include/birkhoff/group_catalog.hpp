#pragma once

// Small named groups used by the test corpus and the random generators.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "birkhoff/fingrp.hpp"

namespace birkhoff::catalog {

inline FiniteGroup cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(t);
}

/// All permutations of {0..n-1} in lexicographic order; (p q)(i) = p(q(i)).
inline FiniteGroup symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::size_t>> t(perms.size(), std::vector<std::size_t>(perms.size()));
  std::vector<std::size_t> r(n);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (std::size_t i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
      t[a][b] = index(r);
    }
  std::vector<std::string> names;
  for (auto& q : perms) {
    std::string s = "[";
    for (auto x : q) s += std::to_string(x);
    names.push_back(s + "]");
  }
  return FiniteGroup::from_table(t, names);
}

/// Dihedral group of order 2n: element r^a s^b stored at index a + n b.
inline FiniteGroup dihedral(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d)
      std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  return FiniteGroup::from_table(t);
}

/// Quaternion group {1,-1,i,-i,j,-j,k,-k}.
inline FiniteGroup quaternion() {
  // unit u in {1,i,j,k} = {0,1,2,3}; element index 2u + (sign negative).
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t u = x / 2, v = y / 2;
      int s = sign[u][v] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
      t[x][y] = 2 * static_cast<std::size_t>(unit[u][v]) + (s < 0 ? 1 : 0);
    }
  return FiniteGroup::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline FiniteGroup alternating(std::size_t n) {
  auto s = symmetric(n);
  std::vector<Elem> even;
  // Parity from inversion count of the lexicographic permutation list.
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Elem idx = 0;
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    if (inv % 2 == 0) even.push_back(idx);
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  return subgroup_as_group(s, Subgroup(s.order(), even)).first;
}

inline FiniteGroup klein_four() { return direct_product(cyclic(2), cyclic(2)); }

}  // namespace birkhoff::catalog
