#pragma once

// Groups relative to abelian groups: [X,X] is the derived subgroup and the
// engine's relative commutator reduces to the classical [K,B].

#include <string>
#include <vector>

#include "birkhoff/fingrp.hpp"
#include "birkhoff/variety.hpp"

namespace birkhoff {

inline nlohmann::json to_json(const Subgroup& s) {
  return {{"order", s.order()}, {"elements", s.elements()}};
}

struct GroupVariety {
  using Object = FiniteGroup;
  using Morphism = GroupHom;
  using Subobject = Subgroup;
  using FiberProduct = GroupFiberProduct;
  using Quotient = QuotientGroup;

  std::string name() const { return "group-ab"; }
  FiniteGroup source(const GroupHom& f) const { return f.source(); }
  FiniteGroup target(const GroupHom& f) const { return f.target(); }
  GroupHom identity(const FiniteGroup& x) const { return GroupHom::identity(x); }
  GroupHom compose(const GroupHom& g, const GroupHom& f) const { return birkhoff::compose(g, f); }
  Subgroup kernel(const GroupHom& f) const { return f.kernel(); }
  Subgroup unit_kernel(const FiniteGroup& x) const { return derived_subgroup(x); }
  Subgroup whole(const FiniteGroup& x) const { return whole_group(x); }
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const { return birkhoff::intersect(a, b); }
  Subgroup image(const GroupHom& f, const Subgroup& s) const { return f.image(s); }
  Subgroup preimage(const GroupHom& f, const Subgroup& s) const { return f.preimage(s); }
  QuotientGroup quotient(const FiniteGroup& x, const Subgroup& n) const { return quotient_group(x, n); }
  GroupHom descend(const GroupHom& q, const GroupHom& h) const { return birkhoff::descend(q, h); }
  GroupFiberProduct fiber_product(const GroupHom& f, const GroupHom& g) const { return birkhoff::fiber_product(f, g); }
  GroupHom lift(const GroupFiberProduct& fp, const GroupHom& m0, const GroupHom& m1) const {
    return birkhoff::lift(fp, m0, m1);
  }
  bool is_zero(const Subgroup& s) const { return s.is_trivial(); }
  bool equal(const Subgroup& a, const Subgroup& b) const { return a == b; }
  bool contains(const Subgroup& a, const Subgroup& b) const { return a.contains(b); }
  bool is_surjective(const GroupHom& f) const { return f.is_surjective(); }
  bool is_injective(const GroupHom& f) const { return f.is_injective(); }
  bool in_variety(const FiniteGroup&) const { return true; }
  bool in_subvariety(const FiniteGroup& x) const { return x.is_abelian(); }
  bool same_morphism(const GroupHom& f, const GroupHom& g) const { return f == g; }
  nlohmann::json to_json(const Subgroup& s) const { return birkhoff::to_json(s); }

  std::vector<GroupHom> enumerate_homs(const FiniteGroup& x, const FiniteGroup& y, std::size_t guard) const {
    return birkhoff::enumerate_homs(x, y, {}, guard);
  }
};

/// Classical [K,B]: normal closure of the commutators [k,b].
inline Subgroup classical_commutator(const FiniteGroup& b, const Subgroup& k) {
  return commutator_subgroup(b, k, whole_group(b));
}

}  // namespace birkhoff
