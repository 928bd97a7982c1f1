#pragma once

// Finite-dimensional Leibniz algebras over Q given by structure constants,
// with the Lie and vector-space reflections and the relative centres.

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/error.hpp"
#include "birkhoff/exactlin.hpp"

namespace birkhoff {

/// Which identity failed and on which basis indices.
struct AlgebraWitness {
  enum class Kind { Leibniz, Square, Antisymmetry } kind;
  std::size_t i = 0, j = 0, k = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::Leibniz:
        return "leibniz(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
      case Kind::Square: return "square(" + std::to_string(i) + ")";
      case Kind::Antisymmetry: return "antisymmetry(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return {};
  }
};

struct AlgebraValidation {
  bool is_leibniz = false;
  bool is_lie = false;
  std::optional<AlgebraWitness> witness;  // first failing check, if any
};

class LeibnizAlgebra {
 public:
  LeibnizAlgebra() : LeibnizAlgebra(0, {}) {}

  /// `constants[(i*dim + j)*dim + k]` is the e_k coefficient of [e_i, e_j].
  /// No identity is checked here; see validate_algebra.
  LeibnizAlgebra(std::size_t dim, std::vector<Rational> constants, std::vector<std::string> names = {}) {
    if (constants.empty()) constants.assign(dim * dim * dim, Rational(0));
    if (constants.size() != dim * dim * dim)
      throw Error(ErrorKind::DimensionMismatch, "structure constant count is not dim^3");
    if (!names.empty() && names.size() != dim) throw Error(ErrorKind::MalformedInput, "basis name count is not dim");
    auto d = std::make_shared<Data>();
    d->dim = dim;
    d->names = std::move(names);
    d->table.resize(dim * dim);
    for (std::size_t p = 0; p < dim * dim; ++p)
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(constants[p * dim + k]) != 0) d->table[p].emplace_back(k, constants[p * dim + k]);
    d->constants = std::move(constants);
    d_ = std::move(d);
  }

  /// Builds from the nonzero brackets [e_i, e_j] = value.
  static LeibnizAlgebra from_brackets(std::size_t dim, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>& brackets,
                                      std::vector<std::string> names = {}) {
    std::vector<Rational> c(dim * dim * dim, Rational(0));
    for (const auto& [ij, value] : brackets) {
      auto [i, j] = ij;
      if (i >= dim || j >= dim || value.size() != dim)
        throw Error(ErrorKind::DimensionMismatch, "bracket entry does not fit the dimension");
      for (std::size_t k = 0; k < dim; ++k) c[(i * dim + j) * dim + k] = value[k];
    }
    return LeibnizAlgebra(dim, std::move(c), std::move(names));
  }

  std::size_t dim() const noexcept { return d_->dim; }
  const std::vector<std::string>& names() const noexcept { return d_->names; }
  const std::vector<Rational>& constants() const noexcept { return d_->constants; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return d_->constants[(i * dim() + j) * dim() + k];
  }

  Vector bracket_basis(std::size_t i, std::size_t j) const {
    Vector v = zero_vector(dim());
    for (const auto& [k, c] : d_->table[i * dim() + j]) v[k] = c;
    return v;
  }

  Vector bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "bracket of wrong-length vectors");
    Vector out = zero_vector(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        const auto& entries = d_->table[i * n + j];
        if (entries.empty()) continue;
        Rational s = x[i] * y[j];
        for (const auto& [k, c] : entries) out[k] += s * c;
      }
    }
    return out;
  }

  bool is_abelian() const {
    for (const auto& e : d_->table)
      if (!e.empty()) return false;
    return true;
  }

  /// Exhaustive check on basis triples, computed once per algebra.
  const AlgebraValidation& validation() const {
    std::call_once(d_->validated, [this] { d_->validation = compute_validation(); });
    return d_->validation;
  }

  bool is_leibniz() const { return validation().is_leibniz; }
  bool is_lie() const { return validation().is_lie; }

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
    return a.d_ == b.d_ || (a.dim() == b.dim() && a.d_->constants == b.d_->constants);
  }

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<Rational> constants;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> table;
    std::vector<std::string> names;
    mutable std::once_flag validated;
    mutable AlgebraValidation validation;
  };

  AlgebraValidation compute_validation() const {
    const std::size_t n = dim();
    AlgebraValidation v;
    v.is_leibniz = true;
    for (std::size_t x = 0; x < n && v.is_leibniz; ++x)
      for (std::size_t y = 0; y < n && v.is_leibniz; ++y)
        for (std::size_t z = 0; z < n && v.is_leibniz; ++z) {
          Vector ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
          Vector lhs = bracket(ex, bracket_basis(y, z));
          Vector rhs = bracket(bracket_basis(x, y), ez) - bracket(bracket_basis(x, z), ey);
          if (lhs != rhs) {
            v.is_leibniz = false;
            v.witness = AlgebraWitness{AlgebraWitness::Kind::Leibniz, x, y, z};
          }
        }
    if (!v.is_leibniz) return v;
    v.is_lie = true;
    for (std::size_t i = 0; i < n && v.is_lie; ++i) {
      if (!birkhoff::is_zero(bracket_basis(i, i))) {
        v.is_lie = false;
        v.witness = AlgebraWitness{AlgebraWitness::Kind::Square, i, i, 0};
        break;
      }
      for (std::size_t j = i + 1; j < n; ++j)
        if (!birkhoff::is_zero(bracket_basis(i, j) + bracket_basis(j, i))) {
          v.is_lie = false;
          v.witness = AlgebraWitness{AlgebraWitness::Kind::Antisymmetry, i, j, 0};
          break;
        }
    }
    return v;
  }

  std::shared_ptr<Data> d_;
};

inline AlgebraValidation validate_algebra(const LeibnizAlgebra& g) { return g.validation(); }

inline void require_leibniz(const LeibnizAlgebra& g) {
  const auto& v = g.validation();
  if (!v.is_leibniz) throw Error(ErrorKind::InputNotLeibniz, "Leibniz identity fails", v.witness->describe());
}

inline void require_lie(const LeibnizAlgebra& g) {
  const auto& v = g.validation();
  if (!v.is_leibniz) throw Error(ErrorKind::InputNotLie, "Leibniz identity fails", v.witness->describe());
  if (!v.is_lie) throw Error(ErrorKind::InputNotLie, "bracket is not alternating", v.witness->describe());
}

/// Linear map between algebras; matrix is target_dim x source_dim.
class AlgebraHom {
 public:
  AlgebraHom() = default;

  /// Checks the bracket is preserved on all basis pairs.
  AlgebraHom(LeibnizAlgebra source, LeibnizAlgebra target, RatMatrix matrix)
      : AlgebraHom(unchecked(std::move(source), std::move(target), std::move(matrix))) {
    if (auto w = failure()) throw Error(ErrorKind::NotHomomorphism, "bracket not preserved", *w);
  }

  static AlgebraHom unchecked(LeibnizAlgebra source, LeibnizAlgebra target, RatMatrix matrix) {
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
      throw Error(ErrorKind::DimensionMismatch, "hom matrix shape differs from target_dim x source_dim");
    AlgebraHom h;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.matrix_ = std::move(matrix);
    return h;
  }

  static AlgebraHom identity(const LeibnizAlgebra& g) { return unchecked(g, g, RatMatrix::identity(g.dim())); }

  /// First basis pair (i, j) where the bracket is not preserved.
  std::optional<std::string> failure() const {
    for (std::size_t i = 0; i < source_.dim(); ++i)
      for (std::size_t j = 0; j < source_.dim(); ++j) {
        Vector lhs = matrix_.apply(source_.bracket_basis(i, j));
        Vector rhs = target_.bracket(matrix_.column(i), matrix_.column(j));
        if (lhs != rhs) return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    return std::nullopt;
  }

  const LeibnizAlgebra& source() const noexcept { return source_; }
  const LeibnizAlgebra& target() const noexcept { return target_; }
  const RatMatrix& matrix() const noexcept { return matrix_; }
  Vector operator()(const Vector& x) const { return matrix_.apply(x); }

  Subspace kernel() const { return birkhoff::kernel(matrix_); }
  Subspace image() const { return column_space(matrix_); }
  std::size_t rank() const { return birkhoff::rank(matrix_); }
  bool is_surjective() const { return rank() == target_.dim(); }
  bool is_injective() const { return rank() == source_.dim(); }
  bool is_bijective() const { return is_surjective() && is_injective(); }

 private:
  LeibnizAlgebra source_;
  LeibnizAlgebra target_;
  RatMatrix matrix_;
};

/// g after f
inline AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
  if (f.target().dim() != g.source().dim()) throw Error(ErrorKind::TargetMismatch, "composite of non-composable maps");
  return AlgebraHom::unchecked(f.source(), g.target(), g.matrix() * f.matrix());
}

/// Two-sided ideals are stored as plain subspaces of the parent.
using Ideal = Subspace;

inline bool is_ideal(const LeibnizAlgebra& g, const Subspace& s) {
  for (const auto& v : s.basis_vectors())
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Vector e = unit_vector(g.dim(), i);
      if (!s.contains(g.bracket(e, v)) || !s.contains(g.bracket(v, e))) return false;
    }
  return true;
}

/// Smallest two-sided ideal containing `seed`, by bracketing with the basis
/// until the dimension stops growing.
inline Ideal ideal_generated(const LeibnizAlgebra& g, const Subspace& seed) {
  const std::size_t n = g.dim();
  if (seed.ambient_dim() != n) throw Error(ErrorKind::DimensionMismatch, "seed does not live in the algebra");
  Subspace current = seed;
  std::vector<Vector> frontier = seed.basis_vectors();
  while (!frontier.empty()) {
    std::vector<Vector> gens = current.basis_vectors();
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        Vector e = unit_vector(n, i);
        gens.push_back(g.bracket(e, v));
        gens.push_back(g.bracket(v, e));
      }
    Subspace next = Subspace::span(n, gens);
    frontier.clear();
    for (const auto& v : next.basis_vectors())
      if (!current.contains(v)) frontier.push_back(v);
    current = std::move(next);
  }
  return current;
}

struct QuotientAlgebra {
  LeibnizAlgebra algebra;
  AlgebraHom projection;
  RatMatrix section;  // linear right inverse of the projection
};

/// g / ideal, with structure constants induced through a linear section.
/// The quotient is re-validated against the identities the input satisfies.
inline QuotientAlgebra quotient_algebra(const LeibnizAlgebra& g, const Ideal& ideal) {
  if (!is_ideal(g, ideal)) throw Error(ErrorKind::InvalidSubobject, "subspace is not a two-sided ideal");
  auto qm = quotient_map(g.dim(), ideal);
  const std::size_t q = qm.quotient_dim;
  std::vector<Rational> c(q * q * q, Rational(0));
  std::vector<Vector> lifts(q);
  for (std::size_t a = 0; a < q; ++a) lifts[a] = qm.section.column(a);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vector v = qm.proj.apply(g.bracket(lifts[a], lifts[b]));
      for (std::size_t k = 0; k < q; ++k) c[(a * q + b) * q + k] = v[k];
    }
  LeibnizAlgebra quotient(q, std::move(c));
  if (g.is_leibniz() && !quotient.is_leibniz())
    throw Error(ErrorKind::VarietyIdentityFailure, "quotient is not Leibniz", quotient.validation().witness->describe());
  if (g.is_lie() && !quotient.is_lie())
    throw Error(ErrorKind::VarietyIdentityFailure, "quotient is not Lie", quotient.validation().witness->describe());
  return {quotient, AlgebraHom::unchecked(g, quotient, qm.proj), qm.section};
}

struct Subalgebra {
  LeibnizAlgebra algebra;
  AlgebraHom inclusion;
};

/// A bracket-closed subspace as an algebra in its own right, coordinatised by
/// the subspace's canonical basis.
inline Subalgebra subalgebra(const LeibnizAlgebra& g, const Subspace& s) {
  const std::size_t m = s.dim();
  auto basis = s.basis_vectors();
  std::vector<Rational> c(m * m * m, Rational(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector v = g.bracket(basis[a], basis[b]);
      if (!s.contains(v)) throw Error(ErrorKind::InvalidSubobject, "subspace is not closed under the bracket");
      Vector coords = s.coordinates(v);
      for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = coords[k];
    }
  LeibnizAlgebra sub(m, std::move(c));
  return {sub, AlgebraHom::unchecked(sub, g, s.basis().transpose())};
}

inline LeibnizAlgebra direct_product(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Rational> c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.constant(i, j, k);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) c[((o + i) * n + o + j) * n + o + k] = b.constant(i, j, k);
  std::vector<std::string> names;
  if (!a.names().empty() && !b.names().empty()) {
    names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
  }
  return LeibnizAlgebra(n, std::move(c), std::move(names));
}

/// Projections a x b -> a and a x b -> b.
inline std::pair<AlgebraHom, AlgebraHom> product_projections(const LeibnizAlgebra& a, const LeibnizAlgebra& b,
                                                             const LeibnizAlgebra& product) {
  RatMatrix pa(a.dim(), product.dim()), pb(b.dim(), product.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) pa(i, i) = 1;
  for (std::size_t i = 0; i < b.dim(); ++i) pb(i, a.dim() + i) = 1;
  return {AlgebraHom::unchecked(product, a, pa), AlgebraHom::unchecked(product, b, pb)};
}

/// span{[x,x] : x}, which in characteristic 0 is spanned by the [e_i,e_i]
/// together with the symmetrised brackets [e_i,e_j] + [e_j,e_i].
inline Subspace squares_span(const LeibnizAlgebra& g) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    gens.push_back(g.bracket_basis(i, i));
    for (std::size_t j = i + 1; j < g.dim(); ++j) gens.push_back(g.bracket_basis(i, j) + g.bracket_basis(j, i));
  }
  return Subspace::span(g.dim(), gens);
}

/// span of all [e_i, e_j]
inline Subspace brackets_span(const LeibnizAlgebra& g) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) gens.push_back(g.bracket_basis(i, j));
  return Subspace::span(g.dim(), gens);
}

inline Ideal ann_ideal(const LeibnizAlgebra& g) { return ideal_generated(g, squares_span(g)); }
inline Ideal derived_ideal(const LeibnizAlgebra& g) { return ideal_generated(g, brackets_span(g)); }

struct LieReflection {
  LeibnizAlgebra lie;
  AlgebraHom unit;
  Ideal ann;
};

inline LieReflection reflector_lie(const LeibnizAlgebra& g) {
  require_leibniz(g);
  auto ann = ann_ideal(g);
  auto q = quotient_algebra(g, ann);
  if (!q.algebra.is_lie())
    throw Error(ErrorKind::VarietyIdentityFailure, "Liesation is not Lie", q.algebra.validation().witness->describe());
  return {q.algebra, q.projection, ann};
}

struct VectReflection {
  std::size_t dim_ab = 0;
  AlgebraHom unit;
  Ideal derived;
};

inline VectReflection reflector_vect(const LeibnizAlgebra& g) {
  require_leibniz(g);
  auto derived = derived_ideal(g);
  auto q = quotient_algebra(g, derived);
  return {q.algebra.dim(), q.projection, derived};
}

/// The composite reflection into vector spaces through Lie algebras:
/// quotient by derived + ann.
inline VectReflection reflector_vect_lie(const LeibnizAlgebra& g) {
  require_leibniz(g);
  auto k = ideal_generated(g, sum(derived_ideal(g), ann_ideal(g)));
  auto q = quotient_algebra(g, k);
  return {q.algebra.dim(), q.projection, k};
}

/// Ideal generated by {z : [e_i,z] + [z,e_i] = 0 for all i}.
inline Ideal z_lie(const LeibnizAlgebra& g) {
  require_leibniz(g);
  const std::size_t n = g.dim();
  // Row block i of the system: column j holds [e_i,e_j] + [e_j,e_i].
  RatMatrix system(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector s = g.bracket_basis(i, j) + g.bracket_basis(j, i);
      for (std::size_t k = 0; k < n; ++k) system(i * n + k, j) = s[k];
    }
  return ideal_generated(g, kernel(system));
}

/// {z : [z,e_i] = [e_i,z] = 0 for all i}
inline Subspace centre(const LeibnizAlgebra& g) {
  const std::size_t n = g.dim();
  RatMatrix system(2 * n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector left = g.bracket_basis(j, i), right = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        system(i * n + k, j) = left[k];
        system(n * n + i * n + k, j) = right[k];
      }
    }
  return kernel(system);
}

enum class AlgebraReflector { Lie, Vect, VectLie };

inline const char* to_string(AlgebraReflector r) {
  switch (r) {
    case AlgebraReflector::Lie: return "lie";
    case AlgebraReflector::Vect: return "vect";
    case AlgebraReflector::VectLie: return "vect_lie";
  }
  return "";
}

/// Kernel of the reflection unit, [g,g] relative to the chosen subvariety.
inline Ideal unit_kernel(const LeibnizAlgebra& g, AlgebraReflector r) {
  switch (r) {
    case AlgebraReflector::Lie: return ann_ideal(g);
    case AlgebraReflector::Vect: return derived_ideal(g);
    case AlgebraReflector::VectLie: return ideal_generated(g, sum(derived_ideal(g), ann_ideal(g)));
  }
  return Subspace::zero(g.dim());
}

inline bool is_perfect(const LeibnizAlgebra& g, AlgebraReflector r) {
  require_leibniz(g);
  return unit_kernel(g, r).is_whole();
}

}  // namespace birkhoff
