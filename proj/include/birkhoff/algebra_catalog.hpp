#pragma once

// Named algebras and a few constructions used to build test instances.

#include <string>
#include <vector>

#include "birkhoff/leib.hpp"

namespace birkhoff::catalog {

using BracketList = std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>;

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline LeibnizAlgebra abelian(std::size_t n) { return LeibnizAlgebra(n, {}); }

/// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LeibnizAlgebra sl2() {
  BracketList b{{{0, 1}, vec({0, 2, 0})},  {{1, 0}, vec({0, -2, 0})}, {{0, 2}, vec({0, 0, -2})},
                {{2, 0}, vec({0, 0, 2})},  {{1, 2}, vec({1, 0, 0})},  {{2, 1}, vec({-1, 0, 0})}};
  return LeibnizAlgebra::from_brackets(3, b, {"h", "e", "f"});
}

/// The two-dimensional Leibniz algebra with [e1,e1] = e2 and nothing else.
inline LeibnizAlgebra l2() { return LeibnizAlgebra::from_brackets(2, {{{0, 0}, vec({0, 1})}}, {"e1", "e2"}); }

/// Heisenberg algebra: [e,f] = z = -[f,e].
inline LeibnizAlgebra heisenberg() {
  return LeibnizAlgebra::from_brackets(3, {{{0, 1}, vec({0, 0, 1})}, {{1, 0}, vec({0, 0, -1})}}, {"e", "f", "z"});
}

/// The non-abelian two-dimensional Lie algebra: [x,y] = y.
inline LeibnizAlgebra r2() {
  return LeibnizAlgebra::from_brackets(2, {{{0, 1}, vec({0, 1})}, {{1, 0}, vec({0, -1})}}, {"x", "y"});
}

/// g tensor Q[t]/(t^m) with basis e_i t^p at index p*dim + i and
/// [a t^p, b t^q] = [a,b] t^(p+q).
inline LeibnizAlgebra truncated_current(const LeibnizAlgebra& g, std::size_t m) {
  const std::size_t n = g.dim(), N = n * m;
  std::vector<Rational> c(N * N * N, Rational(0));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; p + q < m; ++q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            c[((p * n + i) * N + q * n + j) * N + (p + q) * n + k] = g.constant(i, j, k);
  std::vector<std::string> names;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < n; ++i) {
      std::string base = g.names().empty() ? "e" + std::to_string(i) : g.names()[i];
      names.push_back(p == 0 ? base : base + "t" + (p == 1 ? "" : "^" + std::to_string(p)));
    }
  return LeibnizAlgebra(N, std::move(c), std::move(names));
}

/// g acting on a module V (matrices rho[i] of size dimV x dimV, one per basis
/// element of g), giving g + V with [x + v, y + w] = [x,y] + left*rho(x)w - rho(y)v.
/// left = true is the semidirect product; left = false is the hemisemidirect
/// product, a Leibniz algebra that is not Lie once the action is non-zero.
inline LeibnizAlgebra module_extension(const LeibnizAlgebra& g, const std::vector<RatMatrix>& rho, bool left) {
  const std::size_t n = g.dim();
  if (rho.size() != n) throw Error(ErrorKind::DimensionMismatch, "need one action matrix per basis element");
  const std::size_t m = n == 0 ? 0 : rho[0].rows();
  const std::size_t N = n + m;
  std::vector<Rational> c(N * N * N, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * N + j) * N + k] = g.constant(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        c[((n + a) * N + i) * N + n + b] = -rho[i](b, a);
        if (left) c[(i * N + n + a) * N + n + b] = rho[i](b, a);
      }
  return LeibnizAlgebra(N, std::move(c));
}

/// The same algebra written in the basis given by the columns of p, which
/// must be invertible.
inline LeibnizAlgebra change_basis(const LeibnizAlgebra& g, const RatMatrix& p) {
  auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::DimensionMismatch, "basis change matrix is singular");
  const std::size_t n = g.dim();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = pinv->apply(g.bracket(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = v[k];
    }
  return LeibnizAlgebra(n, std::move(c));
}

/// Standard two-dimensional representation of sl2 in the basis h, e, f.
inline std::vector<RatMatrix> sl2_standard_rep() {
  RatMatrix h(2, 2), e(2, 2), f(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(0, 1) = 1;
  f(1, 0) = 1;
  return {h, e, f};
}

}  // namespace birkhoff::catalog
