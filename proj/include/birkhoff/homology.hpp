#pragma once

// Second homology of Lie algebras (Chevalley-Eilenberg) and Leibniz algebras
// (Loday), explicit universal central extensions of perfect algebras, and
// the homological reports built on them.
//
// Degree-2 bases: for CE the pairs i < j in lexicographic order; for Loday
// the pairs (i, j) at index i*n + j. Degree 3 follows the same scheme.

#include <string>
#include <vector>

#include "birkhoff/engine.hpp"
#include "birkhoff/leib_variety.hpp"

namespace birkhoff {

enum class ChainFlavor { CE, Loday };

inline const char* to_string(ChainFlavor f) { return f == ChainFlavor::CE ? "ce" : "loday"; }

struct ChainData {
  RatMatrix d2;  // degree 2 -> g
  RatMatrix d3;  // degree 3 -> degree 2
  std::size_t degree2_dim = 0;
  std::size_t degree3_dim = 0;
  ChainFlavor flavor = ChainFlavor::CE;
};

namespace detail {

inline std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t n) {
  // position of (i, j), i < j, in the lexicographic list of pairs
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace detail

/// x ^ y in the degree-2 space of the given flavor.
inline Vector degree2_product(ChainFlavor flavor, const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  if (flavor == ChainFlavor::Loday) {
    Vector out = zero_vector(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(x[a]) == 0) continue;
      for (std::size_t b = 0; b < n; ++b)
        if (sgn(y[b]) != 0) out[a * n + b] = x[a] * y[b];
    }
    return out;
  }
  Vector out = zero_vector(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational c = x[a] * y[b] - x[b] * y[a];
      if (sgn(c) != 0) out[detail::wedge_index(a, b, n)] = c;
    }
  return out;
}

inline std::size_t degree2_dim(ChainFlavor flavor, std::size_t n) {
  return flavor == ChainFlavor::Loday ? n * n : n * (n - (n > 0 ? 1 : 0)) / 2;
}

inline ChainData chain_complex(const LeibnizAlgebra& g, ChainFlavor flavor) {
  const std::size_t n = g.dim();
  ChainData c;
  c.flavor = flavor;
  c.degree2_dim = degree2_dim(flavor, n);
  c.d2 = RatMatrix(n, c.degree2_dim);
  auto put = [](RatMatrix& m, std::size_t col, const Vector& v) {
    for (std::size_t r = 0; r < v.size(); ++r)
      if (sgn(v[r]) != 0) m(r, col) = v[r];
  };
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  if (flavor == ChainFlavor::CE) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) put(c.d2, detail::wedge_index(i, j, n), g.bracket_basis(i, j));
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          cols.push_back(degree2_product(flavor, g.bracket_basis(i, j), e(k)) -
                         degree2_product(flavor, g.bracket_basis(i, k), e(j)) +
                         degree2_product(flavor, g.bracket_basis(j, k), e(i)));
    c.degree3_dim = cols.size();
    c.d3 = RatMatrix(c.degree2_dim, cols.size());
    for (std::size_t col = 0; col < cols.size(); ++col) put(c.d3, col, cols[col]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) put(c.d2, i * n + j, g.bracket_basis(i, j));
    c.degree3_dim = n * n * n;
    c.d3 = RatMatrix(c.degree2_dim, c.degree3_dim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          put(c.d3, (i * n + j) * n + k,
              degree2_product(flavor, g.bracket_basis(i, j), e(k)) -
                  degree2_product(flavor, g.bracket_basis(i, k), e(j)) -
                  degree2_product(flavor, e(i), g.bracket_basis(j, k)));
  }
  return c;
}

struct H2Result {
  std::size_t dim = 0;
  ChainData chain;
  std::size_t rank_d2 = 0;
  std::size_t rank_d3 = 0;
  Subspace cycles;                     // ker d2
  Subspace boundaries;                 // im d3
  std::vector<Vector> representatives;  // cycles whose classes form a basis
};

inline H2Result second_homology(const LeibnizAlgebra& g, ChainFlavor flavor) {
  H2Result r;
  r.chain = chain_complex(g, flavor);
  r.cycles = kernel(r.chain.d2);
  r.boundaries = column_space(r.chain.d3);
  r.rank_d2 = r.chain.degree2_dim - r.cycles.dim();
  r.rank_d3 = r.boundaries.dim();
  r.dim = r.cycles.dim() - r.rank_d3;
  Subspace spanned = r.boundaries;
  for (const auto& z : r.cycles.basis_vectors()) {
    if (spanned.contains(z)) continue;
    r.representatives.push_back(z);
    spanned = sum(spanned, Subspace::span(z.size(), {z}));
  }
  return r;
}

inline H2Result ce_h2(const LeibnizAlgebra& g) {
  require_lie(g);
  return second_homology(g, ChainFlavor::CE);
}

inline H2Result loday_hl2(const LeibnizAlgebra& g) {
  require_leibniz(g);
  return second_homology(g, ChainFlavor::Loday);
}

/// Dimension of the reflection of g.
inline std::size_t h1(const LeibnizAlgebra& g, AlgebraReflector r) {
  require_leibniz(g);
  return g.dim() - unit_kernel(g, r).dim();
}

enum class UceKind { LieVsVect, LeibVsVectLie };

inline const char* to_string(UceKind k) { return k == UceKind::LieVsVect ? "lie_vs_vect" : "leib_vs_vectlie"; }

inline LeibVariety variety_of(UceKind k) {
  return k == UceKind::LieVsVect ? LeibVariety::lie_vect() : LeibVariety::leib_vect();
}

inline ChainFlavor flavor_of(UceKind k) { return k == UceKind::LieVsVect ? ChainFlavor::CE : ChainFlavor::Loday; }

struct UceResult {
  LeibnizAlgebra total;
  AlgebraHom projection;
  Subspace kernel;
  std::size_t h2_dim = 0;
  std::vector<Check> checks;
};

/// H1 = H2 = 0 for the domain of a central extension, which certifies it as
/// universal.
struct HomologicalCertificate {
  bool central = false;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  bool universal() const { return central && h1 == 0 && h2 == 0; }
};

inline HomologicalCertificate homological_certificate(UceKind kind, const Extension<LeibVariety>& u) {
  auto v = variety_of(kind);
  const auto& U = u.map.source();
  HomologicalCertificate c;
  c.central = is_central(v, u);
  c.h1 = h1(U, v.reflector);
  c.h2 = second_homology(U, flavor_of(kind)).dim;
  return c;
}

inline void require_perfect(const LeibnizAlgebra& g, UceKind kind) {
  if (kind == UceKind::LieVsVect)
    require_lie(g);
  else
    require_leibniz(g);
  if (!is_perfect(g, variety_of(kind).reflector))
    throw Error(ErrorKind::NotPerfect, "algebra is not perfect for this reflector",
                "H1 dim " + std::to_string(h1(g, variety_of(kind).reflector)));
}

/// The universal central extension C2 / im d3 -> g, x^y |-> [x,y], with
/// bracket {u, v} = d2(u) ^ d2(v). Every postcondition is verified and
/// reported as a check.
inline UceResult uce_construct(const LeibnizAlgebra& g, UceKind kind) {
  require_perfect(g, kind);
  const auto flavor = flavor_of(kind);
  auto chain = chain_complex(g, flavor);
  const Subspace boundaries = column_space(chain.d3);
  auto qm = quotient_map(chain.degree2_dim, boundaries);
  const std::size_t q = qm.quotient_dim;
  const RatMatrix proj_matrix = chain.d2 * qm.section;  // class -> g

  std::vector<Vector> images(q);  // d2 of each basis class
  for (std::size_t a = 0; a < q; ++a) images[a] = proj_matrix.column(a);

  // Bracket of a boundary with any class must be a boundary.
  for (const auto& w : boundaries.basis_vectors()) {
    Vector dw = chain.d2.apply(w);
    for (std::size_t a = 0; a < q; ++a) {
      if (!boundaries.contains(degree2_product(flavor, dw, images[a])) ||
          !boundaries.contains(degree2_product(flavor, images[a], dw)))
        throw Error(ErrorKind::WellDefinednessFailure, "bracket is not constant on boundary cosets",
                    "class " + std::to_string(a));
    }
  }

  std::vector<Rational> c(q * q * q, Rational(0));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vector v = qm.proj.apply(degree2_product(flavor, images[a], images[b]));
      for (std::size_t k = 0; k < q; ++k) c[(a * q + b) * q + k] = v[k];
    }
  LeibnizAlgebra total(q, std::move(c));

  UceResult r;
  r.total = total;
  r.projection = AlgebraHom::unchecked(total, g, proj_matrix);
  r.kernel = kernel(proj_matrix);
  r.h2_dim = second_homology(g, flavor).dim;

  const bool identities = kind == UceKind::LieVsVect ? total.is_lie() : total.is_leibniz();
  nlohmann::json id_witness = nullptr;
  if (!identities && total.validation().witness) id_witness = total.validation().witness->describe();
  r.checks.push_back(Check::verdict("total_satisfies_identities", identities, id_witness));
  if (!identities) throw Error(ErrorKind::VarietyIdentityFailure, "extension object fails the variety identities",
                               id_witness.is_null() ? "" : id_witness.get<std::string>());

  auto failure = r.projection.failure();
  r.checks.push_back(Check::verdict("projection_is_surjective_hom", !failure && r.projection.is_surjective(),
                                    {{"bracket_failure", failure ? *failure : ""},
                                     {"rank", r.projection.rank()}}));
  auto v = variety_of(kind);
  auto ext = make_extension(v, r.projection);
  auto rc = relative_commutator(v, ext);
  r.checks.push_back(Check::verdict("extension_is_central", rc.is_zero(), {{"relative_commutator", to_json(rc)}}));
  r.checks.push_back(Check::verdict("kernel_dim_equals_h2", r.kernel.dim() == r.h2_dim,
                                    {{"kernel_dim", r.kernel.dim()}, {"h2_dim", r.h2_dim}}));
  const std::size_t total_h1 = h1(total, v.reflector);
  r.checks.push_back(Check::verdict("total_is_perfect", total_h1 == 0, {{"h1", total_h1}}));
  const std::size_t total_h2 = second_homology(total, flavor).dim;
  r.checks.push_back(Check::verdict("total_h1_h2_vanish", total_h1 == 0 && total_h2 == 0,
                                    {{"h1", total_h1}, {"h2", total_h2}}));
  return r;
}

/// The matrix of the map induced on degree-2 spaces by a linear map m.
inline RatMatrix induced_degree2(ChainFlavor flavor, const RatMatrix& m) {
  const std::size_t n = m.cols(), t = m.rows();
  RatMatrix out(degree2_dim(flavor, t), degree2_dim(flavor, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = (flavor == ChainFlavor::CE ? i + 1 : 0); j < n; ++j) {
      Vector v = degree2_product(flavor, m.column(i), m.column(j));
      const std::size_t col = flavor == ChainFlavor::CE ? detail::wedge_index(i, j, n) : i * n + j;
      for (std::size_t r = 0; r < v.size(); ++r) out(r, col) = v[r];
    }
  return out;
}

struct FiveTermReport {
  std::size_t h2_b = 0, h2_a = 0, k_mod = 0, h1_b = 0, h1_a = 0;
  std::vector<Check> checks;
};

/// H2(B) -> H2(A) -> K/[K,B] -> H1(B) -> H1(A) -> 0 for an extension in
/// Lie > Vect (CE homology) or Leib > Vect (Loday homology). Each junction is
/// compared as a pair of subspaces of an ambient space containing both.
inline FiveTermReport five_term_report(const LeibVariety& v, const Extension<LeibVariety>& f) {
  if (v.reflector == AlgebraReflector::Lie)
    throw Error(ErrorKind::UnsupportedHomology, "no second homology relative to Lie is available");
  const auto flavor = v.lie_ambient ? ChainFlavor::CE : ChainFlavor::Loday;
  const auto& B = f.map.source();
  const auto& A = f.map.target();
  auto hb = second_homology(B, flavor);
  auto ha = second_homology(A, flavor);
  auto tail = three_term_tail(v, f);
  const Subspace& rc = tail.relative_commutator;

  FiveTermReport r;
  r.h2_b = hb.dim;
  r.h2_a = ha.dim;
  r.k_mod = f.kernel.dim() - rc.dim();
  r.h1_b = h1(B, v.reflector);
  r.h1_a = h1(A, v.reflector);

  const RatMatrix push = induced_degree2(flavor, f.map.matrix());                               // C2(B) -> C2(A)
  const RatMatrix connect = hb.chain.d2 * induced_degree2(flavor, right_inverse(f.map.matrix()));  // C2(A) -> B

  r.checks.push_back(Check::verdict("induced_map_is_chain_map", ha.chain.d2 * push == f.map.matrix() * hb.chain.d2,
                                    "d2 does not commute with the induced map"));
  const Subspace pushed = sum(image_of(push, hb.cycles), ha.boundaries);
  r.checks.push_back(Check::verdict("H2(B)_lands_in_cycles", ha.cycles.contains(pushed), "image leaves ker d2"));

  const Subspace delta_kernel = intersection(ha.cycles, preimage(connect, rc));
  r.checks.push_back(Check::verdict("connecting_map_well_defined", delta_kernel.contains(ha.boundaries),
                                    "boundaries not sent into [K,B]"));
  r.checks.push_back(Check::verdict("exact_at_H2(A)", pushed == delta_kernel,
                                    {{"image_dim", pushed.dim()}, {"kernel_dim", delta_kernel.dim()}}));

  const Subspace delta_image = sum(image_of(connect, ha.cycles), rc);
  r.checks.push_back(Check::verdict("connecting_map_lands_in_K", f.kernel.contains(delta_image), "image leaves K"));
  const Subspace next_kernel = intersection(f.kernel, v.unit_kernel(B));
  r.checks.push_back(Check::verdict("exact_at_K/[K,B]", delta_image == next_kernel,
                                    {{"image_dim", delta_image.dim()}, {"kernel_dim", next_kernel.dim()}}));
  for (auto& c : tail.checks) r.checks.push_back(std::move(c));
  return r;
}

struct ComparisonReport {
  std::size_t hl2 = 0;      // HL2(g)
  std::size_t h2 = 0;       // H2(g), Chevalley-Eilenberg
  std::size_t hl2_uce = 0;  // HL2(U(g, vect))
  std::vector<Check> checks;
};

/// For a perfect Lie algebra g: HL2(g) = H2(g) + HL2(U(g,vect)), the
/// centrality comparison on the supplied Lie extensions, and the Liesation of
/// the Loday UCE behaving as the CE UCE.
inline ComparisonReport comparison_report(const LeibnizAlgebra& g,
                                          const std::vector<AlgebraHom>& sampled_extensions = {}) {
  require_lie(g);
  if (!is_perfect(g, AlgebraReflector::Vect)) throw Error(ErrorKind::NotPerfect, "comparison needs a perfect Lie algebra");
  ComparisonReport r;
  r.hl2 = second_homology(g, ChainFlavor::Loday).dim;
  r.h2 = second_homology(g, ChainFlavor::CE).dim;
  auto uce_lie = uce_construct(g, UceKind::LieVsVect);
  r.hl2_uce = second_homology(uce_lie.total, ChainFlavor::Loday).dim;
  r.checks.push_back(Check::verdict("hl2_additivity", r.hl2 == r.h2 + r.hl2_uce,
                                    {{"hl2", r.hl2}, {"h2", r.h2}, {"hl2_uce", r.hl2_uce}}));

  const auto lie = LeibVariety::lie_vect();
  const auto leib = LeibVariety::leib_vect();
  for (std::size_t i = 0; i < sampled_extensions.size(); ++i) {
    auto e = make_extension(lie, sampled_extensions[i]);
    const bool in_lie = is_central(lie, e), in_leib = is_central(leib, e);
    r.checks.push_back(Check::verdict("sample[" + std::to_string(i) + "]_central_agrees", in_lie == in_leib,
                                      {{"lie_vect", in_lie}, {"leib_vect", in_leib}}));
  }

  // Liesation of the Loday UCE of g is a vect-central extension of g with
  // vanishing H1 and H2, so it is the CE UCE up to isomorphism.
  auto uce_leib = uce_construct(g, UceKind::LeibVsVectLie);
  auto lies = reflector_lie(uce_leib.total);
  auto induced = LeibVariety::leib_lie().descend(lies.unit, uce_leib.projection);
  auto ext = make_extension(lie, induced);
  auto cert = homological_certificate(UceKind::LieVsVect, ext);
  r.checks.push_back(Check::verdict("liesation_preserves_uce",
                                    cert.universal() && lies.lie.dim() == uce_lie.total.dim(),
                                    {{"central", cert.central}, {"h1", cert.h1}, {"h2", cert.h2},
                                     {"dim", lies.lie.dim()}, {"expected_dim", uce_lie.total.dim()}}));
  return r;
}

}  // namespace birkhoff
