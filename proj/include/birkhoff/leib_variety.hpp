#pragma once

// Leibniz and Lie algebras over Q as instances of the variety contract. One
// struct covers the three inclusions Leib > Lie, Leib > Vect and Lie > Vect;
// only the unit kernel and the membership tests depend on the choice.

#include <string>

#include "birkhoff/leib.hpp"
#include "birkhoff/variety.hpp"

namespace birkhoff {

inline nlohmann::json to_json(const Subspace& s) {
  auto basis = nlohmann::json::array();
  for (const auto& v : s.basis_vectors()) {
    auto row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    basis.push_back(std::move(row));
  }
  return {{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

struct AlgebraFiberProduct {
  LeibnizAlgebra object;
  AlgebraHom p0, p1;
  Subspace pairs;  // {(b, c) : f b = g c} inside the product's coordinate space
};

struct AlgebraQuotient {
  LeibnizAlgebra object;
  AlgebraHom projection;
};

/// A right inverse of a surjective matrix, supported on the pivot columns.
inline RatMatrix right_inverse(const RatMatrix& q) {
  auto piv = rref(q).pivots;
  if (piv.size() != q.rows()) throw Error(ErrorKind::NotSurjective, "matrix has no right inverse");
  RatMatrix square(q.rows(), q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t a = 0; a < piv.size(); ++a) square(i, a) = q(i, piv[a]);
  auto inv = inverse(square);
  RatMatrix s(q.cols(), q.rows());
  for (std::size_t a = 0; a < piv.size(); ++a)
    for (std::size_t j = 0; j < q.rows(); ++j) s(piv[a], j) = (*inv)(a, j);
  return s;
}

struct LeibVariety {
  using Object = LeibnizAlgebra;
  using Morphism = AlgebraHom;
  using Subobject = Subspace;
  using FiberProduct = AlgebraFiberProduct;
  using Quotient = AlgebraQuotient;

  AlgebraReflector reflector = AlgebraReflector::Lie;
  bool lie_ambient = false;  // objects must be Lie (the Lie > Vect instance)

  static LeibVariety leib_lie() { return {AlgebraReflector::Lie, false}; }
  static LeibVariety leib_vect() { return {AlgebraReflector::VectLie, false}; }
  static LeibVariety lie_vect() { return {AlgebraReflector::Vect, true}; }

  std::string name() const {
    if (lie_ambient) return "lie-vect";
    return reflector == AlgebraReflector::Lie ? "leib-lie" : "leib-vect";
  }

  LeibnizAlgebra source(const AlgebraHom& f) const { return f.source(); }
  LeibnizAlgebra target(const AlgebraHom& f) const { return f.target(); }
  AlgebraHom identity(const LeibnizAlgebra& x) const { return AlgebraHom::identity(x); }
  AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) const { return birkhoff::compose(g, f); }
  Subspace kernel(const AlgebraHom& f) const { return f.kernel(); }
  Subspace unit_kernel(const LeibnizAlgebra& x) const { return birkhoff::unit_kernel(x, reflector); }
  Subspace whole(const LeibnizAlgebra& x) const { return Subspace::whole(x.dim()); }
  Subspace intersect(const Subspace& a, const Subspace& b) const { return intersection(a, b); }
  Subspace image(const AlgebraHom& f, const Subspace& s) const { return image_of(f.matrix(), s); }
  Subspace preimage(const AlgebraHom& f, const Subspace& s) const { return birkhoff::preimage(f.matrix(), s); }

  AlgebraQuotient quotient(const LeibnizAlgebra& x, const Subspace& s) const {
    auto q = quotient_algebra(x, s);
    return {q.algebra, q.projection};
  }

  /// The map h' with h' . q = h; h must vanish on the kernel of q.
  AlgebraHom descend(const AlgebraHom& q, const AlgebraHom& h) const {
    if (q.source().dim() != h.source().dim()) throw Error(ErrorKind::TargetMismatch, "descend needs a common source");
    if (!h.kernel().contains(q.kernel()))
      throw Error(ErrorKind::InvalidSubobject, "map does not vanish on the quotient kernel");
    return AlgebraHom::unchecked(q.target(), h.target(), h.matrix() * right_inverse(q.matrix()));
  }

  AlgebraFiberProduct fiber_product(const AlgebraHom& f, const AlgebraHom& g) const {
    if (f.target().dim() != g.target().dim() || !(f.target() == g.target()))
      throw Error(ErrorKind::TargetMismatch, "fiber product needs a common target");
    const auto& B = f.source();
    const auto& C = g.source();
    RatMatrix neg_g = RatMatrix(g.matrix().rows(), g.matrix().cols()) - g.matrix();
    Subspace pairs = birkhoff::kernel(RatMatrix::hstack(f.matrix(), neg_g));
    auto product = direct_product(B, C);
    auto sub = subalgebra(product, pairs);
    auto [pb, pc] = product_projections(B, C, product);
    return {sub.algebra, birkhoff::compose(pb, sub.inclusion), birkhoff::compose(pc, sub.inclusion), pairs};
  }

  AlgebraHom lift(const AlgebraFiberProduct& fp, const AlgebraHom& m0, const AlgebraHom& m1) const {
    const std::size_t n = m0.source().dim();
    RatMatrix out(fp.pairs.dim(), n);
    for (std::size_t x = 0; x < n; ++x) {
      Vector v = m0.matrix().column(x);
      Vector w = m1.matrix().column(x);
      v.insert(v.end(), w.begin(), w.end());
      if (v.size() != fp.pairs.ambient_dim() || !fp.pairs.contains(v))
        throw Error(ErrorKind::TargetMismatch, "pair does not land in the fiber product");
      Vector c = fp.pairs.coordinates(v);
      for (std::size_t i = 0; i < c.size(); ++i) out(i, x) = c[i];
    }
    return AlgebraHom::unchecked(m0.source(), fp.object, std::move(out));
  }

  bool is_zero(const Subspace& s) const { return s.is_zero(); }
  bool equal(const Subspace& a, const Subspace& b) const { return a == b; }
  bool contains(const Subspace& a, const Subspace& b) const { return a.contains(b); }
  bool is_surjective(const AlgebraHom& f) const { return f.is_surjective(); }
  bool is_injective(const AlgebraHom& f) const { return f.is_injective(); }
  bool in_variety(const LeibnizAlgebra& x) const { return lie_ambient ? x.is_lie() : x.is_leibniz(); }

  bool in_subvariety(const LeibnizAlgebra& x) const {
    return reflector == AlgebraReflector::Lie ? x.is_lie() : x.is_abelian();
  }

  bool same_morphism(const AlgebraHom& f, const AlgebraHom& g) const {
    return f.source().dim() == g.source().dim() && f.target().dim() == g.target().dim() && f.matrix() == g.matrix();
  }

  nlohmann::json to_json(const Subspace& s) const { return birkhoff::to_json(s); }
};

/// Classical [K,B]: span of all [k,b] and [b,k], which is already an ideal.
inline Subspace classical_commutator(const LeibnizAlgebra& b, const Subspace& k) {
  std::vector<Vector> gens;
  for (const auto& v : k.basis_vectors())
    for (std::size_t i = 0; i < b.dim(); ++i) {
      Vector e = unit_vector(b.dim(), i);
      gens.push_back(b.bracket(v, e));
      gens.push_back(b.bracket(e, v));
    }
  return Subspace::span(b.dim(), gens);
}

/// The three characterisations of Lie-centrality of a Leibniz extension.
struct LieCentrality {
  bool central = false;           // generic engine with the Liesation reflector
  bool kernel_pair_ann = false;   // the first projection maps R[f]^Ann isomorphically onto B^Ann
  bool kernel_in_z_lie = false;   // K[f] inside Z_Lie(B)
  bool agree() const { return central == kernel_pair_ann && central == kernel_in_z_lie; }
};

inline LieCentrality lie_centrality(const Extension<LeibVariety>& f) {
  const auto v = LeibVariety::leib_lie();
  LieCentrality c;
  auto r = v.fiber_product(f.map, f.map);
  const Subspace rc = v.image(r.p1, v.intersect(v.unit_kernel(r.object), v.kernel(r.p0)));
  c.central = rc.is_zero();
  const Subspace r_ann = ann_ideal(r.object);
  const bool injective = intersection(r_ann, r.p0.kernel()).is_zero();
  c.kernel_pair_ann = injective && image_of(r.p0.matrix(), r_ann) == ann_ideal(f.map.source());
  c.kernel_in_z_lie = z_lie(f.map.source()).contains(f.kernel);
  return c;
}

}  // namespace birkhoff
