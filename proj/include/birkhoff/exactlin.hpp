#pragma once

// Exact linear algebra over the rationals. Every subspace is stored by its
// reduced row-echelon basis, so two equal subspaces compare equal bit for bit.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birkhoff/error.hpp"

namespace birkhoff {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorKind::ParseError, "not a rational: '" + s + "'", s); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](std::string_view d, bool allow_sign) {
    if (!d.empty() && allow_sign && (d[0] == '-' || d[0] == '+')) d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw bad();
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    return Rational(mpz_class(digits));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw bad();
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Vector operator+(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  /// Matrix whose columns are the given vectors, each of length `rows`.
  static RatMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    RatMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return Vector(first, first + static_cast<std::ptrdiff_t>(cols_));
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto base = data_.begin();
    std::swap_ranges(base + static_cast<std::ptrdiff_t>(a * cols_), base + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     base + static_cast<std::ptrdiff_t>(b * cols_));
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    Vector out = zero_vector(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// [a; b]
  static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack column mismatch");
    RatMatrix m(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return m;
  }

  /// [a | b]
  static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack row mismatch");
    RatMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix rref;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Row operations only touch the nonzero entries
/// of the pivot row, which keeps the sparse boundary matrices cheap.
inline RrefResult rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, c);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j : support) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

/// Subspace of Q^n in canonical form: the nonzero rows of its RREF.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t n) { return Subspace(n, RatMatrix(0, n), {}); }

  static Subspace whole(std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(n, RatMatrix::identity(n), std::move(piv));
  }

  /// Span of the rows of `generators`.
  static Subspace span(const RatMatrix& generators) {
    auto [red, piv] = rref(generators);
    RatMatrix basis(piv.size(), generators.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = red(i, j);
    return Subspace(generators.cols(), std::move(basis), std::move(piv));
  }

  static Subspace span(std::size_t n, const std::vector<Vector>& generators) {
    return span(RatMatrix::from_rows(generators, n));
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_; }
  const RatMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  /// Coordinates of `v` in the canonical basis; only meaningful when v lies in
  /// the subspace (the RREF basis makes them the pivot entries of v).
  Vector coordinates(const Vector& v) const {
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  /// Residue of `v` after clearing its pivot entries; zero iff v is a member.
  Vector reduce(Vector v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    for (std::size_t i = 0; i < dim(); ++i) {
      Rational f = v[pivots_[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (sgn(basis_(i, j)) != 0) v[j] -= f * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vector& v) const { return birkhoff::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_same_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Row basis of the annihilator: x is in this subspace iff W x = 0.
  RatMatrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  void check_same_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_)
      throw Error(ErrorKind::DimensionMismatch, "subspaces live in different ambient spaces",
                  std::to_string(ambient_) + " vs " + std::to_string(other.ambient_));
  }

 private:
  Subspace(std::size_t n, RatMatrix basis, std::vector<std::size_t> pivots)
      : ambient_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} as a canonical subspace of Q^cols.
inline Subspace kernel(const RatMatrix& m) {
  auto [red, piv] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

/// Column space of m as a canonical subspace of Q^rows, spanned by the
/// columns of m at the pivot positions of its RREF.
inline Subspace column_space(const RatMatrix& m) {
  auto piv = rref(m).pivots;
  RatMatrix gens(piv.size(), m.rows());
  for (std::size_t a = 0; a < piv.size(); ++a)
    for (std::size_t i = 0; i < m.rows(); ++i) gens(a, i) = m(i, piv[a]);
  return Subspace::span(gens);
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  auto [red, piv] = rref(RatMatrix::hstack(m, RatMatrix::identity(n)));
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

inline RatMatrix Subspace::annihilator() const {
  auto ann = kernel(basis_);
  return ann.basis();
}

struct KernelImage {
  RatMatrix rref;
  Subspace kernel;
  Subspace image;
};

inline KernelImage rref_kernel_image(const RatMatrix& m) {
  return {rref(m).rref, kernel(m), column_space(m)};
}

struct QuotientMap {
  RatMatrix proj;  // quotient_dim x ambient_dim, kernel exactly s
  std::size_t quotient_dim = 0;
  RatMatrix section;  // ambient_dim x quotient_dim, proj * section = 1
};

/// The quotient Q^n / s, coordinatised by the non-pivot columns of s.
inline QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& s) {
  if (s.ambient_dim() != ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "subspace does not live in the given ambient space",
                std::to_string(s.ambient_dim()) + " vs " + std::to_string(ambient_dim));
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) free.push_back(j);
  const std::size_t q = free.size();
  QuotientMap out{RatMatrix(q, ambient_dim), q, RatMatrix(ambient_dim, q)};
  // proj(v) = free coordinates of (v - sum_i v[p_i] b_i).
  for (std::size_t a = 0; a < q; ++a) {
    out.proj(a, free[a]) = 1;
    out.section(free[a], a) = 1;
    for (std::size_t i = 0; i < s.dim(); ++i) out.proj(a, s.pivots()[i]) = -s.basis()(i, free[a]);
  }
  return out;
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_same_ambient(b);
  return Subspace::span(RatMatrix::vstack(a.basis(), b.basis()));
}

inline Subspace intersection(const Subspace& a, const Subspace& b) {
  a.check_same_ambient(b);
  return kernel(RatMatrix::vstack(a.annihilator(), b.annihilator()));
}

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains = false;  // b inside a
  bool equal = false;
};

inline SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  a.check_same_ambient(b);
  return {sum(a, b), intersection(a, b), a.contains(b), a == b};
}

/// m(s) for a linear map m : Q^cols -> Q^rows.
inline Subspace image_of(const RatMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "map source differs from subspace ambient");
  if (s.is_zero()) return Subspace::zero(m.rows());
  return Subspace::span((m * s.basis().transpose()).transpose());
}

/// {v : m v in s}
inline Subspace preimage(const RatMatrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "map target differs from subspace ambient");
  if (s.is_whole()) return Subspace::whole(m.cols());
  return kernel(s.annihilator() * m);
}

}  // namespace birkhoff
