#pragma once

// Precrossed modules (T, G, boundary, action) over finite groups, Peiffer
// commutators, the reflectors to crossed and abelian crossed modules, and
// the variety adapter used by the engine.

#include <optional>
#include <string>
#include <vector>

#include "birkhoff/engine.hpp"
#include "birkhoff/fingrp.hpp"
#include "birkhoff/group_variety.hpp"

namespace birkhoff {

/// Exhaustive checks are limited to |T| * |G| at most this.
inline constexpr std::size_t kPxmGuard = 4096;

class PrecrossedModule {
 public:
  PrecrossedModule() : boundary_(GroupHom::identity(FiniteGroup())), action_{0} {}

  /// `action[g][t]` is the index of g acting on t. Only shapes and the
  /// boundary homomorphism are checked; see validate_pxm for the axioms.
  PrecrossedModule(FiniteGroup t, FiniteGroup g, std::vector<Elem> boundary,
                   const std::vector<std::vector<Elem>>& action)
      : t_(t), g_(g), boundary_(t, g, std::move(boundary)) {
    if (action.size() != g.order()) throw Error(ErrorKind::MalformedInput, "action needs one row per element of G");
    action_.reserve(g.order() * t.order());
    for (std::size_t a = 0; a < action.size(); ++a) {
      if (action[a].size() != t.order())
        throw Error(ErrorKind::MalformedInput, "action row length differs from |T|", "row " + std::to_string(a));
      for (Elem x : action[a]) {
        if (x >= t.order()) throw Error(ErrorKind::MalformedInput, "action entry out of range", std::to_string(x));
        action_.push_back(x);
      }
    }
  }

  /// For data produced by the constructions below.
  static PrecrossedModule unchecked(FiniteGroup t, FiniteGroup g, GroupHom boundary, std::vector<Elem> flat_action) {
    PrecrossedModule x;
    x.t_ = std::move(t);
    x.g_ = std::move(g);
    x.boundary_ = std::move(boundary);
    x.action_ = std::move(flat_action);
    return x;
  }

  /// T acting on itself by conjugation through the identity.
  static PrecrossedModule conjugation(const FiniteGroup& t) {
    std::vector<Elem> act(t.order() * t.order());
    for (Elem g = 0; g < t.order(); ++g)
      for (Elem x = 0; x < t.order(); ++x) act[g * t.order() + x] = t.conj(g, x);
    return unchecked(t, t, GroupHom::identity(t), std::move(act));
  }

  /// (T, 1) with the trivial boundary and action.
  static PrecrossedModule over_trivial(const FiniteGroup& t) {
    FiniteGroup one;
    std::vector<Elem> act(t.order());
    for (Elem x = 0; x < t.order(); ++x) act[x] = x;
    return unchecked(t, one, GroupHom::unchecked(t, one, std::vector<Elem>(t.order(), 0)), std::move(act));
  }

  const FiniteGroup& t_group() const noexcept { return t_; }
  const FiniteGroup& g_group() const noexcept { return g_; }
  const GroupHom& boundary() const noexcept { return boundary_; }
  Elem act(Elem g, Elem t) const { return action_[g * t_.order() + t]; }
  const std::vector<Elem>& flat_action() const noexcept { return action_; }

  std::vector<std::vector<Elem>> action_table() const {
    std::vector<std::vector<Elem>> out(g_.order());
    for (Elem g = 0; g < g_.order(); ++g)
      out[g].assign(action_.begin() + g * t_.order(), action_.begin() + (g + 1) * t_.order());
    return out;
  }

  friend bool operator==(const PrecrossedModule& a, const PrecrossedModule& b) {
    return a.t_ == b.t_ && a.g_ == b.g_ && a.boundary_ == b.boundary_ && a.action_ == b.action_;
  }

 private:
  FiniteGroup t_, g_;
  GroupHom boundary_;
  std::vector<Elem> action_;
};

inline void check_pxm_size(const PrecrossedModule& x, std::size_t guard = kPxmGuard) {
  const std::size_t size = x.t_group().order() * x.g_group().order();
  if (size > guard)
    throw Error(ErrorKind::SizeGuardExceeded, "precrossed module too large for exhaustive checks",
                "|T||G| = " + std::to_string(size) + " > " + std::to_string(guard));
}

struct PxmValidation {
  bool is_precrossed = false;
  bool is_crossed = false;
  nlohmann::json witness;  // first failing axiom, null when crossed
};

inline PxmValidation validate_pxm(const PrecrossedModule& x) {
  const auto& T = x.t_group();
  const auto& G = x.g_group();
  const auto& d = x.boundary();
  PxmValidation v;
  auto fail = [&](std::string kind, nlohmann::json at) {
    v.witness = {{"axiom", std::move(kind)}, {"at", std::move(at)}};
    return v;
  };
  for (Elem t = 0; t < T.order(); ++t)
    if (x.act(G.identity(), t) != t) return fail("identity_acts_trivially", {{"t", t}});
  for (Elem g = 0; g < G.order(); ++g) {
    std::vector<bool> hit(T.order(), false);
    for (Elem t = 0; t < T.order(); ++t) {
      if (hit[x.act(g, t)]) return fail("action_is_bijective", {{"g", g}, {"t", t}});
      hit[x.act(g, t)] = true;
      for (Elem u = 0; u < T.order(); ++u)
        if (x.act(g, T.mul(t, u)) != T.mul(x.act(g, t), x.act(g, u)))
          return fail("action_preserves_products", {{"g", g}, {"t", t}, {"t_prime", u}});
    }
  }
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem h = 0; h < G.order(); ++h)
      for (Elem t = 0; t < T.order(); ++t)
        if (x.act(G.mul(g, h), t) != x.act(g, x.act(h, t)))
          return fail("action_is_homomorphism", {{"g", g}, {"h", h}, {"t", t}});
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem t = 0; t < T.order(); ++t)
      if (d(x.act(g, t)) != G.conj(g, d(t))) return fail("equivariance", {{"g", g}, {"t", t}});
  v.is_precrossed = true;
  for (Elem t = 0; t < T.order(); ++t)
    for (Elem u = 0; u < T.order(); ++u)
      if (x.act(d(t), u) != T.conj(t, u)) return fail("peiffer_identity", {{"t", t}, {"t_prime", u}});
  v.is_crossed = true;
  v.witness = nullptr;
  return v;
}

inline bool is_abelian_crossed(const PrecrossedModule& x) {
  if (!x.t_group().is_abelian() || !x.g_group().is_abelian()) return false;
  for (Elem g = 0; g < x.g_group().order(); ++g)
    for (Elem t = 0; t < x.t_group().order(); ++t)
      if (x.act(g, t) != t) return false;
  return validate_pxm(x).is_crossed;
}

/// Morphism (f1 : T -> T', f0 : G -> G').
class XModHom {
 public:
  XModHom() = default;

  XModHom(PrecrossedModule source, PrecrossedModule target, GroupHom f1, GroupHom f0)
      : XModHom(unchecked(std::move(source), std::move(target), std::move(f1), std::move(f0))) {
    if (auto w = failure()) throw Error(ErrorKind::NotHomomorphism, "not a morphism of precrossed modules", *w);
  }

  static XModHom unchecked(PrecrossedModule source, PrecrossedModule target, GroupHom f1, GroupHom f0) {
    XModHom h;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.f1_ = std::move(f1);
    h.f0_ = std::move(f0);
    return h;
  }

  static XModHom identity(const PrecrossedModule& x) {
    return unchecked(x, x, GroupHom::identity(x.t_group()), GroupHom::identity(x.g_group()));
  }

  std::optional<std::string> failure() const {
    if (!(f1_.source() == source_.t_group()) || !(f1_.target() == target_.t_group()) ||
        !(f0_.source() == source_.g_group()) || !(f0_.target() == target_.g_group()))
      return "component maps do not match the modules";
    for (Elem t = 0; t < source_.t_group().order(); ++t)
      if (target_.boundary()(f1_(t)) != f0_(source_.boundary()(t))) return "boundary square fails at t=" + std::to_string(t);
    for (Elem g = 0; g < source_.g_group().order(); ++g)
      for (Elem t = 0; t < source_.t_group().order(); ++t)
        if (f1_(source_.act(g, t)) != target_.act(f0_(g), f1_(t)))
          return "action not preserved at (g,t)=(" + std::to_string(g) + "," + std::to_string(t) + ")";
    return std::nullopt;
  }

  const PrecrossedModule& source() const noexcept { return source_; }
  const PrecrossedModule& target() const noexcept { return target_; }
  const GroupHom& f1() const noexcept { return f1_; }
  const GroupHom& f0() const noexcept { return f0_; }

  friend bool operator==(const XModHom& a, const XModHom& b) { return a.f1_ == b.f1_ && a.f0_ == b.f0_; }

 private:
  PrecrossedModule source_, target_;
  GroupHom f1_, f0_;
};

inline XModHom compose(const XModHom& g, const XModHom& f) {
  return XModHom::unchecked(f.source(), g.target(), compose(g.f1(), f.f1()), compose(g.f0(), f.f0()));
}

/// A pair (M inside T, H inside G).
struct PXSub {
  Subgroup m_sub;
  Subgroup h_sub;
  friend bool operator==(const PXSub& a, const PXSub& b) { return a.m_sub == b.m_sub && a.h_sub == b.h_sub; }
};

inline nlohmann::json to_json(const PXSub& s) { return {{"T", to_json(s.m_sub)}, {"G", to_json(s.h_sub)}}; }

inline PXSub whole_pxsub(const PrecrossedModule& x) { return {whole_group(x.t_group()), whole_group(x.g_group())}; }

inline PXSub trivial_pxsub(const PrecrossedModule& x) {
  return {trivial_subgroup(x.t_group()), trivial_subgroup(x.g_group())};
}

/// Why (M, H) fails to be a normal precrossed submodule, if it does. The
/// conditions: M and H normal, boundary(M) inside H, M stable under G, and
/// (^h t) t^-1 in M for every h in H and t in T.
inline std::optional<std::string> normal_pxsub_failure(const PrecrossedModule& x, const PXSub& s) {
  const auto& T = x.t_group();
  const auto& G = x.g_group();
  if (s.m_sub.parent_order() != T.order() || s.h_sub.parent_order() != G.order())
    return "subgroups belong to different groups";
  if (!is_subgroup(T, s.m_sub.elements())) return "M is not a subgroup";
  if (!is_subgroup(G, s.h_sub.elements())) return "H is not a subgroup";
  if (auto w = normality_witness(T, s.m_sub)) return "M not normal at (" + std::to_string(w->first) + "," + std::to_string(w->second) + ")";
  if (auto w = normality_witness(G, s.h_sub)) return "H not normal at (" + std::to_string(w->first) + "," + std::to_string(w->second) + ")";
  for (Elem m : s.m_sub.elements()) {
    if (!s.h_sub.contains(x.boundary()(m))) return "boundary of m=" + std::to_string(m) + " leaves H";
    for (Elem g = 0; g < G.order(); ++g)
      if (!s.m_sub.contains(x.act(g, m))) return "M not G-stable at (g,m)=(" + std::to_string(g) + "," + std::to_string(m) + ")";
  }
  for (Elem h : s.h_sub.elements())
    for (Elem t = 0; t < T.order(); ++t)
      if (!s.m_sub.contains(T.mul(x.act(h, t), T.inv(t))))
        return "(^h t) t^-1 leaves M at (h,t)=(" + std::to_string(h) + "," + std::to_string(t) + ")";
  return std::nullopt;
}

/// Smallest normal precrossed submodule containing the seeds.
inline PXSub normal_pxsub_closure(const PrecrossedModule& x, const std::vector<Elem>& t_seed,
                                  const std::vector<Elem>& g_seed) {
  const auto& T = x.t_group();
  const auto& G = x.g_group();
  Subgroup m = normal_closure(T, t_seed);
  Subgroup h = normal_closure(G, g_seed);
  while (true) {
    std::vector<Elem> ms = m.elements();
    for (Elem g = 0; g < G.order(); ++g)
      for (Elem t : m.elements()) ms.push_back(x.act(g, t));
    for (Elem a : h.elements())
      for (Elem t = 0; t < T.order(); ++t) ms.push_back(T.mul(x.act(a, t), T.inv(t)));
    Subgroup m2 = normal_closure(T, ms);
    std::vector<Elem> hs = h.elements();
    for (Elem t : m2.elements()) hs.push_back(x.boundary()(t));
    Subgroup h2 = normal_closure(G, hs);
    if (m2 == m && h2 == h) return {m, h};
    m = std::move(m2);
    h = std::move(h2);
  }
}

/// <m,n> = m n m^-1 (^{d m} n)^-1
inline Elem peiffer_element(const PrecrossedModule& x, Elem m, Elem n) {
  const auto& T = x.t_group();
  return T.mul(T.mul(T.mul(m, n), T.inv(m)), T.inv(x.act(x.boundary()(m), n)));
}

/// Normal closure in T of the Peiffer elements <m,n> and <n,m>.
inline Subgroup peiffer_commutator(const PrecrossedModule& x, const PXSub& m, const PXSub& n) {
  for (const auto* s : {&m, &n})
    if (auto w = normal_pxsub_failure(x, *s)) throw Error(ErrorKind::InvalidSubobject, "not a normal precrossed submodule", *w);
  std::vector<bool> seen(x.t_group().order(), false);
  std::vector<Elem> seed;
  auto add = [&](Elem e) {
    if (!seen[e]) {
      seen[e] = true;
      seed.push_back(e);
    }
  };
  for (Elem a : m.m_sub.elements())
    for (Elem b : n.m_sub.elements()) {
      add(peiffer_element(x, a, b));
      add(peiffer_element(x, b, a));
    }
  return normal_closure(x.t_group(), seed);
}

/// [G,T]: normal closure in T of (^g t) t^-1.
inline Subgroup action_commutator(const PrecrossedModule& x) {
  const auto& T = x.t_group();
  std::vector<Elem> seed;
  for (Elem g = 0; g < x.g_group().order(); ++g)
    for (Elem t = 0; t < T.order(); ++t) seed.push_back(T.mul(x.act(g, t), T.inv(t)));
  return normal_closure(T, seed);
}

struct PxmQuotient {
  PrecrossedModule object;
  XModHom projection;
};

/// (T/M, G/H) with the induced boundary and action.
inline PxmQuotient quotient_pxm(const PrecrossedModule& x, const PXSub& s) {
  if (auto w = normal_pxsub_failure(x, s)) throw Error(ErrorKind::NotNormal, "not a normal precrossed submodule", *w);
  auto qt = quotient_group(x.t_group(), s.m_sub);
  auto qg = quotient_group(x.g_group(), s.h_sub);
  const auto& Tq = qt.object;
  const auto& Gq = qg.object;
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> rep_t(Tq.order(), unset), rep_g(Gq.order(), unset);
  for (Elem t = 0; t < x.t_group().order(); ++t)
    if (rep_t[qt.projection(t)] == unset) rep_t[qt.projection(t)] = t;
  for (Elem g = 0; g < x.g_group().order(); ++g)
    if (rep_g[qg.projection(g)] == unset) rep_g[qg.projection(g)] = g;
  std::vector<Elem> bd(Tq.order());
  for (Elem c = 0; c < Tq.order(); ++c) bd[c] = qg.projection(x.boundary()(rep_t[c]));
  std::vector<Elem> act(Gq.order() * Tq.order());
  for (Elem a = 0; a < Gq.order(); ++a)
    for (Elem c = 0; c < Tq.order(); ++c) act[a * Tq.order() + c] = qt.projection(x.act(rep_g[a], rep_t[c]));
  auto q = PrecrossedModule::unchecked(Tq, Gq, GroupHom::unchecked(Tq, Gq, std::move(bd)), std::move(act));
  return {q, XModHom::unchecked(x, q, qt.projection, qg.projection)};
}

/// Quotient by (<T,T>, 1); the result is verified to be crossed.
inline PxmQuotient peiffication(const PrecrossedModule& x) {
  auto full = whole_pxsub(x);
  auto q = quotient_pxm(x, {peiffer_commutator(x, full, full), trivial_subgroup(x.g_group())});
  auto v = validate_pxm(q.object);
  if (!v.is_crossed) throw Error(ErrorKind::VarietyIdentityFailure, "Peiffication is not crossed", v.witness.dump());
  return q;
}

enum class AbTarget { XModToAb, PxmToAb };

/// Unit kernel of the reflection into abelian crossed modules.
inline PXSub ab_kernel(const PrecrossedModule& x, AbTarget target) {
  Subgroup m = action_commutator(x);
  if (target == AbTarget::PxmToAb) m = join(x.t_group(), m, derived_subgroup(x.t_group()));
  return {m, derived_subgroup(x.g_group())};
}

inline PxmQuotient reflect_ab(const PrecrossedModule& x, AbTarget target) {
  auto v = validate_pxm(x);
  if (target == AbTarget::XModToAb && !v.is_crossed)
    throw Error(ErrorKind::InvalidSubobject, "abelianisation of crossed modules needs a crossed module", v.witness.dump());
  if (!v.is_precrossed) throw Error(ErrorKind::InvalidSubobject, "input is not precrossed", v.witness.dump());
  auto q = quotient_pxm(x, ab_kernel(x, target));
  if (!is_abelian_crossed(q.object))
    throw Error(ErrorKind::VarietyIdentityFailure, "reflection is not an abelian crossed module");
  return q;
}

struct XModCentre {
  PXSub sub;  // (Z_XMod T, G)
  std::vector<Check> checks;
};

/// Z_XMod T = {t : <t,t'> = 1 = <t',t> for all t'}, paired with G. The
/// subgroup, normality and G-stability properties are verified, not assumed.
inline XModCentre z_xmod(const PrecrossedModule& x) {
  const auto& T = x.t_group();
  std::vector<Elem> z;
  for (Elem t = 0; t < T.order(); ++t) {
    bool in = true;
    for (Elem u = 0; u < T.order() && in; ++u)
      in = peiffer_element(x, t, u) == T.identity() && peiffer_element(x, u, t) == T.identity();
    if (in) z.push_back(t);
  }
  XModCentre out;
  const bool closed = is_subgroup(T, z);
  out.checks.push_back(Check::verdict("z_is_subgroup", closed, {{"elements", z}}));
  Subgroup zs = closed ? Subgroup(T.order(), z) : generated_subgroup(T, z);
  out.sub = {zs, whole_group(x.g_group())};
  auto w = normality_witness(T, zs);
  out.checks.push_back(Check::verdict("z_normal_in_T", !w, w ? nlohmann::json{w->first, w->second} : nlohmann::json()));
  nlohmann::json stable_witness;
  for (Elem g = 0; g < x.g_group().order() && stable_witness.is_null(); ++g)
    for (Elem t : zs.elements())
      if (!zs.contains(x.act(g, t))) {
        stable_witness = {{"g", g}, {"t", t}};
        break;
      }
  out.checks.push_back(Check::verdict("z_action_stable", stable_witness.is_null(), stable_witness));
  return out;
}

enum class PxmReflector { Peiff, AbPeiff, Ab };

struct PxmFiberProduct {
  PrecrossedModule object;
  XModHom p0, p1;
  GroupFiberProduct t_part, g_part;
};

struct PxmVariety {
  using Object = PrecrossedModule;
  using Morphism = XModHom;
  using Subobject = PXSub;
  using FiberProduct = PxmFiberProduct;
  using Quotient = PxmQuotient;

  PxmReflector reflector = PxmReflector::Peiff;

  std::string name() const {
    switch (reflector) {
      case PxmReflector::Peiff: return "pxm-xmod";
      case PxmReflector::AbPeiff: return "pxm-ab";
      case PxmReflector::Ab: return "xmod-ab";
    }
    return {};
  }

  PrecrossedModule source(const XModHom& f) const { return f.source(); }
  PrecrossedModule target(const XModHom& f) const { return f.target(); }
  XModHom identity(const PrecrossedModule& x) const { return XModHom::identity(x); }
  XModHom compose(const XModHom& g, const XModHom& f) const { return birkhoff::compose(g, f); }
  PXSub kernel(const XModHom& f) const { return {f.f1().kernel(), f.f0().kernel()}; }

  PXSub unit_kernel(const PrecrossedModule& x) const {
    switch (reflector) {
      case PxmReflector::Peiff: {
        auto full = whole_pxsub(x);
        return {peiffer_commutator(x, full, full), trivial_subgroup(x.g_group())};
      }
      case PxmReflector::AbPeiff: return ab_kernel(x, AbTarget::PxmToAb);
      case PxmReflector::Ab: return ab_kernel(x, AbTarget::XModToAb);
    }
    return trivial_pxsub(x);
  }

  PXSub whole(const PrecrossedModule& x) const { return whole_pxsub(x); }
  PXSub intersect(const PXSub& a, const PXSub& b) const {
    return {birkhoff::intersect(a.m_sub, b.m_sub), birkhoff::intersect(a.h_sub, b.h_sub)};
  }
  PXSub image(const XModHom& f, const PXSub& s) const { return {f.f1().image(s.m_sub), f.f0().image(s.h_sub)}; }
  PXSub preimage(const XModHom& f, const PXSub& s) const {
    return {f.f1().preimage(s.m_sub), f.f0().preimage(s.h_sub)};
  }
  PxmQuotient quotient(const PrecrossedModule& x, const PXSub& s) const { return quotient_pxm(x, s); }

  XModHom descend(const XModHom& q, const XModHom& h) const {
    return XModHom::unchecked(q.target(), h.target(), birkhoff::descend(q.f1(), h.f1()),
                              birkhoff::descend(q.f0(), h.f0()));
  }

  /// Pairs in both components, with the componentwise boundary and the
  /// diagonal action.
  PxmFiberProduct fiber_product(const XModHom& f, const XModHom& g) const {
    auto tp = birkhoff::fiber_product(f.f1(), g.f1());
    auto gp = birkhoff::fiber_product(f.f0(), g.f0());
    const auto& B = f.source();
    const auto& C = g.source();
    auto index_of = [](const GroupFiberProduct& fp, Elem a, Elem b) {
      auto it = std::lower_bound(fp.pairs.begin(), fp.pairs.end(), std::make_pair(a, b));
      return static_cast<Elem>(it - fp.pairs.begin());
    };
    std::vector<Elem> bd(tp.pairs.size());
    for (std::size_t i = 0; i < tp.pairs.size(); ++i)
      bd[i] = index_of(gp, B.boundary()(tp.pairs[i].first), C.boundary()(tp.pairs[i].second));
    std::vector<Elem> act(gp.pairs.size() * tp.pairs.size());
    for (std::size_t a = 0; a < gp.pairs.size(); ++a)
      for (std::size_t i = 0; i < tp.pairs.size(); ++i)
        act[a * tp.pairs.size() + i] =
            index_of(tp, B.act(gp.pairs[a].first, tp.pairs[i].first), C.act(gp.pairs[a].second, tp.pairs[i].second));
    auto R = PrecrossedModule::unchecked(tp.object, gp.object, GroupHom::unchecked(tp.object, gp.object, std::move(bd)),
                                         std::move(act));
    auto p0 = XModHom::unchecked(R, B, tp.p0, gp.p0);
    auto p1 = XModHom::unchecked(R, C, tp.p1, gp.p1);
    return {R, p0, p1, std::move(tp), std::move(gp)};
  }

  XModHom lift(const PxmFiberProduct& fp, const XModHom& m0, const XModHom& m1) const {
    return XModHom::unchecked(m0.source(), fp.object, birkhoff::lift(fp.t_part, m0.f1(), m1.f1()),
                              birkhoff::lift(fp.g_part, m0.f0(), m1.f0()));
  }

  bool is_zero(const PXSub& s) const { return s.m_sub.is_trivial() && s.h_sub.is_trivial(); }
  bool equal(const PXSub& a, const PXSub& b) const { return a == b; }
  bool contains(const PXSub& a, const PXSub& b) const {
    return a.m_sub.contains(b.m_sub) && a.h_sub.contains(b.h_sub);
  }
  bool is_surjective(const XModHom& f) const { return f.f1().is_surjective() && f.f0().is_surjective(); }
  bool is_injective(const XModHom& f) const { return f.f1().is_injective() && f.f0().is_injective(); }

  bool in_variety(const PrecrossedModule& x) const {
    auto v = validate_pxm(x);
    return reflector == PxmReflector::Ab ? v.is_crossed : v.is_precrossed;
  }

  bool in_subvariety(const PrecrossedModule& x) const {
    return reflector == PxmReflector::Peiff ? validate_pxm(x).is_crossed : is_abelian_crossed(x);
  }

  bool same_morphism(const XModHom& f, const XModHom& g) const { return f == g; }
  nlohmann::json to_json(const PXSub& s) const { return birkhoff::to_json(s); }

  /// Pairs of component homomorphisms compatible with boundary and action.
  std::vector<XModHom> enumerate_homs(const PrecrossedModule& x, const PrecrossedModule& y, std::size_t guard) const {
    auto h1 = birkhoff::enumerate_homs(x.t_group(), y.t_group(), {}, guard);
    auto h0 = birkhoff::enumerate_homs(x.g_group(), y.g_group(), {}, guard);
    std::vector<XModHom> out;
    for (const auto& f0 : h0)
      for (const auto& f1 : h1) {
        auto h = XModHom::unchecked(x, y, f1, f0);
        if (!h.failure()) out.push_back(std::move(h));
      }
    return out;
  }
};

struct CentralityEquivalence {
  bool central = false;            // (1) generic engine, Peiffication reflector
  bool kernel_pair_peiffer = false;  // (2) <R,R> maps isomorphically onto <B,B>
  bool peiffer_orders = false;     // (3) |<R[f1],R[f1]>| = |<T,T>|
  bool kernel_in_z_t = false;      // (4) K[f1] inside Z_XMod T
  bool kernel_in_z = false;        // (5) K[f] inside Z_XMod(T,G)
  bool peiffer_kb_trivial = false; // <K[f], B> = 1
  bool agree() const {
    return central == kernel_pair_peiffer && central == peiffer_orders && central == kernel_in_z_t &&
           central == kernel_in_z && central == peiffer_kb_trivial;
  }
};

inline CentralityEquivalence centrality_equiv(const XModHom& f) {
  PxmVariety v{PxmReflector::Peiff};
  auto ext = make_extension(v, f);
  const auto& B = f.source();
  CentralityEquivalence c;
  c.central = is_central(v, ext);

  auto r = v.fiber_product(f, f);
  auto full_r = whole_pxsub(r.object);
  auto full_b = whole_pxsub(B);
  const Subgroup pr = peiffer_commutator(r.object, full_r, full_r);
  const Subgroup pb = peiffer_commutator(B, full_b, full_b);
  const bool injective = birkhoff::intersect(pr, r.p0.f1().kernel()).is_trivial();
  c.kernel_pair_peiffer = injective && r.p0.f1().image(pr) == pb;
  c.peiffer_orders = pr.order() == pb.order();

  auto z = z_xmod(B);
  c.kernel_in_z_t = z.sub.m_sub.contains(ext.kernel.m_sub);
  c.kernel_in_z = v.contains(z.sub, ext.kernel);
  c.peiffer_kb_trivial = peiffer_commutator(B, ext.kernel, full_b).is_trivial();
  return c;
}

}  // namespace birkhoff
