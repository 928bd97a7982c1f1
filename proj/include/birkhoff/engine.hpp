#pragma once

// Generic relative-centrality engine. Every construction here is phrased in
// terms of the Variety contract only, so it runs unchanged for groups,
// Leibniz/Lie algebras and precrossed modules.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/variety.hpp"

namespace birkhoff {

template <Variety V>
struct Reflection {
  typename V::Object object;
  typename V::Morphism unit;
};

/// The unit X -> X/[X,X]_B.
template <Variety V>
Reflection<V> reflect(const V& v, const typename V::Object& x) {
  auto q = v.quotient(x, v.unit_kernel(x));
  return {q.object, q.projection};
}

template <Variety V>
bool is_perfect(const V& v, const typename V::Object& x) {
  return v.equal(v.unit_kernel(x), v.whole(x));
}

/// [K,B]_B computed from the kernel pair: the image under the second
/// projection of [R[f],R[f]]_B intersected with the kernel of the first.
template <Variety V>
typename V::Subobject relative_commutator(const V& v, const Extension<V>& f) {
  auto r = v.fiber_product(f.map, f.map);
  auto s = v.unit_kernel(r.object);
  return v.image(r.p1, v.intersect(s, v.kernel(r.p0)));
}

/// f : B -> A is trivial when the comparison B -> BB x_{BA} A is bijective.
template <Variety V>
bool is_trivial_extension(const V& v, const typename V::Morphism& f) {
  auto rb = reflect(v, v.source(f));
  auto ra = reflect(v, v.target(f));
  auto reflected = v.descend(rb.unit, v.compose(ra.unit, f));
  auto fp = v.fiber_product(reflected, ra.unit);
  return is_bijective(v, v.lift(fp, rb.unit, f));
}

/// f is normal when both kernel-pair projections are trivial.
template <Variety V>
bool is_normal_extension(const V& v, const typename V::Morphism& f) {
  auto r = v.fiber_product(f, f);
  return is_trivial_extension(v, r.p0) && is_trivial_extension(v, r.p1);
}

template <Variety V>
struct ExtensionReport {
  typename V::Subobject relative_commutator;
  bool central = false;
  bool trivial = false;
  bool normal = false;
  std::optional<bool> split;
  std::vector<Check> checks;
};

/// Searches for a section by enumeration where the variety supports it.
template <Variety V>
std::optional<bool> find_split(const V& v, const typename V::Morphism& f, std::size_t guard) {
  if constexpr (EnumerableVariety<V>) {
    auto id = v.identity(v.target(f));
    for (const auto& s : v.enumerate_homs(v.target(f), v.source(f), guard))
      if (v.same_morphism(v.compose(f, s), id)) return true;
    return false;
  } else {
    (void)v, (void)f, (void)guard;
    return std::nullopt;
  }
}

/// Classifies f. When a section is supplied it is verified and used for the
/// split flag; otherwise enumeration is tried (finite varieties only).
template <Variety V>
ExtensionReport<V> classify_extension(const V& v, const Extension<V>& f,
                                      const std::optional<typename V::Morphism>& section = std::nullopt,
                                      std::size_t guard = 256) {
  ExtensionReport<V> r;
  r.relative_commutator = relative_commutator(v, f);
  r.central = v.is_zero(r.relative_commutator);
  r.trivial = is_trivial_extension(v, f.map);
  r.normal = is_normal_extension(v, f.map);
  if (section) {
    r.split = v.same_morphism(v.compose(f.map, *section), v.identity(v.target(f.map)));
    r.checks.push_back(Check::verdict("section_is_right_inverse", *r.split, "supplied map is not a section"));
  } else {
    try {
      r.split = find_split(v, f.map, guard);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeGuardExceeded) throw;
    }
  }
  r.checks.push_back(Check::verdict("central_iff_normal", r.central == r.normal,
                                    {{"central", r.central}, {"normal", r.normal}}));
  r.checks.push_back(Check::verdict("trivial_implies_central", !r.trivial || r.central,
                                    {{"trivial", r.trivial}, {"central", r.central}}));
  if (r.split && *r.split)
    r.checks.push_back(Check::verdict("split_central_iff_trivial", r.central == r.trivial,
                                      {{"central", r.central}, {"trivial", r.trivial}}));
  return r;
}

template <Variety V>
bool is_central(const V& v, const Extension<V>& f) {
  return v.is_zero(relative_commutator(v, f));
}

template <Variety V>
struct Centralisation {
  Extension<V> central;       // B/[K,B]_B -> A
  typename V::Morphism unit;  // B -> B/[K,B]_B
  std::vector<Check> checks;
};

template <Variety V>
Centralisation<V> centralise(const V& v, const Extension<V>& f) {
  auto rc = relative_commutator(v, f);
  auto q = v.quotient(v.source(f.map), rc);
  auto induced = make_extension(v, v.descend(q.projection, f.map));
  Centralisation<V> out{induced, q.projection, {}};
  auto again = relative_commutator(v, out.central);
  out.checks.push_back(Check::verdict("centralisation_is_central", v.is_zero(again), v.to_json(again)));
  return out;
}

/// The pullback g*f of f along g : C -> A, as an extension of C.
template <Variety V>
Extension<V> pullback(const V& v, const Extension<V>& f, const typename V::Morphism& g) {
  auto fp = v.fiber_product(f.map, g);
  return make_extension(v, fp.p1);
}

/// f after g must be central when f, g are central and the domain of g is
/// perfect. Violated preconditions give a skip; a central-failure is a fail.
template <Variety V>
Check compose_central_check(const V& v, const Extension<V>& f, const Extension<V>& g) {
  const std::string name = "composite_of_central_is_central";
  if (!is_central(v, f)) return Check::skip(name, "outer extension is not central");
  if (!is_central(v, g)) return Check::skip(name, "inner extension is not central");
  if (!is_perfect(v, v.source(g.map))) return Check::skip(name, "domain of the inner extension is not perfect");
  auto composite = make_extension(v, v.compose(f.map, g.map));
  auto rc = relative_commutator(v, composite);
  return Check::verdict(name, v.is_zero(rc), {{"relative_commutator", v.to_json(rc)}});
}

struct Factorization {
  std::size_t count = 0;  // number of h with f . h = u
  bool exists() const { return count > 0; }
  bool unique() const { return count == 1; }
};

struct UniversalityCertificate {
  bool perfect = false;
  std::vector<Factorization> factorizations;
  std::vector<Check> checks;
};

/// Enumerative certificate: for each central f in the family, counts the
/// morphisms h : U -> B_f with f . h = u.
template <EnumerableVariety V>
UniversalityCertificate universality_certificate(const V& v, const Extension<V>& u,
                                                 const std::vector<Extension<V>>& family, std::size_t guard = 256) {
  UniversalityCertificate cert;
  const auto U = v.source(u.map);
  cert.perfect = is_perfect(v, U);
  cert.checks.push_back(Check::verdict("u_is_central", is_central(v, u), "u is not central"));
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& f = family[i];
    const std::string tag = "family[" + std::to_string(i) + "]";
    cert.checks.push_back(Check::verdict(tag + "_is_central", is_central(v, f), "family member is not central"));
    Factorization fac;
    for (const auto& h : v.enumerate_homs(U, v.source(f.map), guard)) {
      bool factors = false;
      try {
        factors = v.same_morphism(v.compose(f.map, h), u.map);
      } catch (const Error&) {
        throw Error(ErrorKind::TargetMismatch, "family member has a different codomain", tag);
      }
      if (factors) ++fac.count;
    }
    cert.factorizations.push_back(fac);
    // With a perfect domain, factorisations through central maps are unique.
    if (cert.perfect && is_central(v, f))
      cert.checks.push_back(Check::verdict(tag + "_at_most_one_factorization", fac.count <= 1,
                                           {{"count", fac.count}}));
  }
  return cert;
}

template <Variety V>
struct TailTerms {
  typename V::Subobject kernel;                 // K inside B
  typename V::Subobject relative_commutator;    // [K,B]_B inside B
  typename V::Subobject image_of_kernel;        // image of K in BB
  typename V::Subobject kernel_of_reflection;   // kernel of BB -> BA
  std::vector<Check> checks;
};

/// The tail K/[K,B]_B -> BB -> BA -> 0 of the five-term sequence, which
/// needs nothing beyond the variety contract.
template <Variety V>
TailTerms<V> three_term_tail(const V& v, const Extension<V>& f) {
  TailTerms<V> t;
  t.kernel = f.kernel;
  t.relative_commutator = relative_commutator(v, f);
  const auto B = v.source(f.map);
  auto rb = reflect(v, B);
  auto ra = reflect(v, v.target(f.map));
  auto reflected = v.descend(rb.unit, v.compose(ra.unit, f.map));
  t.image_of_kernel = v.image(rb.unit, f.kernel);
  t.kernel_of_reflection = v.kernel(reflected);
  t.checks.push_back(Check::verdict("commutator_inside_unit_kernel",
                                    v.contains(v.unit_kernel(B), t.relative_commutator),
                                    {{"relative_commutator", v.to_json(t.relative_commutator)}}));
  t.checks.push_back(Check::verdict("exact_at_H1(B)", v.equal(t.image_of_kernel, t.kernel_of_reflection),
                                    {{"image", v.to_json(t.image_of_kernel)},
                                     {"kernel", v.to_json(t.kernel_of_reflection)}}));
  t.checks.push_back(Check::verdict("H1(B)_to_H1(A)_surjective", v.is_surjective(reflected), "not surjective"));
  return t;
}

}  // namespace birkhoff
