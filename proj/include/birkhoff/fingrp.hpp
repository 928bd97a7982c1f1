#pragma once

// Finite groups given by multiplication tables. Elements are indices into the
// table in input order; "the same group" means the same table.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/error.hpp"

namespace birkhoff {

using Elem = std::uint32_t;

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial_data()) {}

  /// Validates a square table exhaustively (Latin square, identity, two-sided
  /// inverses, associativity) and throws with the witnessing elements.
  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table,
                                std::vector<std::string> names = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorKind::MalformedInput, "empty multiplication table");
    auto data = std::make_shared<Data>();
    data->order = n;
    data->table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n)
        throw Error(ErrorKind::MalformedInput, "multiplication table is not square", "row " + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n)
          throw Error(ErrorKind::MalformedInput, "table entry out of range",
                      "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        data->table[i * n + j] = static_cast<Elem>(table[i][j]);
      }
    }
    auto at = [&](std::size_t a, std::size_t b) { return data->table[a * n + b]; };
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[at(i, j)])
          throw Error(ErrorKind::NotLatinSquare, "row repeats an element",
                      "row " + std::to_string(i) + " value " + std::to_string(at(i, j)));
        if (col[at(j, i)])
          throw Error(ErrorKind::NotLatinSquare, "column repeats an element",
                      "column " + std::to_string(i) + " value " + std::to_string(at(j, i)));
        row[at(i, j)] = col[at(j, i)] = true;
      }
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = at(i, j) == j && at(j, i) == j;
      if (ok) e = i;
    }
    if (!e) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");
    data->identity = static_cast<Elem>(*e);
    data->inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<std::size_t> inv;
      for (std::size_t j = 0; j < n; ++j)
        if (at(i, j) == *e) inv = j;
      if (!inv || at(*inv, i) != *e)
        throw Error(ErrorKind::NoInverse, "element has no two-sided inverse", "element " + std::to_string(i));
      data->inverse[i] = static_cast<Elem>(*inv);
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw Error(ErrorKind::NotAssociative, "associativity fails",
                        "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    if (!names.empty() && names.size() != n)
      throw Error(ErrorKind::MalformedInput, "names list has the wrong length");
    data->names = std::move(names);
    return FiniteGroup(std::move(data));
  }

  std::size_t order() const noexcept { return d_->order; }
  Elem identity() const noexcept { return d_->identity; }
  Elem mul(Elem a, Elem b) const { return d_->table[a * d_->order + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }  // a b a^-1 b^-1
  const std::vector<std::string>& names() const noexcept { return d_->names; }

  std::string name(Elem a) const { return d_->names.empty() ? std::to_string(a) : d_->names[a]; }

  std::vector<std::vector<std::size_t>> table() const {
    std::vector<std::vector<std::size_t>> t(order(), std::vector<std::size_t>(order()));
    for (std::size_t i = 0; i < order(); ++i)
      for (std::size_t j = 0; j < order(); ++j) t[i][j] = mul(static_cast<Elem>(i), static_cast<Elem>(j));
    return t;
  }

  std::size_t element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || (a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Elem> table{0};
    Elem identity = 0;
    std::vector<Elem> inverse{0};
    std::vector<std::string> names;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  static std::shared_ptr<const Data> trivial_data() {
    static const auto d = std::make_shared<const Data>();
    return d;
  }

  std::shared_ptr<const Data> d_;
};

/// A subset of a group's elements, closed under the group operations. The
/// parent is not stored; every operation takes it explicitly.
class Subgroup {
 public:
  Subgroup() = default;

  /// `elements` must already be a subgroup; use the closure functions below
  /// to build one from arbitrary seeds.
  Subgroup(std::size_t parent_order, std::vector<Elem> elements) : member_(parent_order, false) {
    for (Elem x : elements) member_.at(x) = true;
    for (Elem x = 0; x < parent_order; ++x)
      if (member_[x]) elements_.push_back(x);
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t parent_order() const noexcept { return member_.size(); }
  bool contains(Elem x) const { return x < member_.size() && member_[x]; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  bool is_trivial() const noexcept { return elements_.size() <= 1; }
  bool is_whole() const noexcept { return elements_.size() == member_.size(); }

  bool contains(const Subgroup& other) const {
    return std::all_of(other.elements_.begin(), other.elements_.end(), [&](Elem x) { return contains(x); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.member_ == b.member_; }

 private:
  std::vector<Elem> elements_;
  std::vector<bool> member_;
};

inline Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g.order(), {g.identity()}); }

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g.order(), std::move(all));
}

/// Subgroup generated by `seed`: closure of {1} under right multiplication by
/// the seed (inverses come for free in a finite group).
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> found{g.identity()};
  in[g.identity()] = true;
  std::vector<Elem> gens;
  for (Elem s : seed) {
    if (s >= g.order()) throw Error(ErrorKind::InvalidSubobject, "seed element out of range", std::to_string(s));
    if (s != g.identity()) gens.push_back(s);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(found[i], s);
      if (!in[y]) {
        in[y] = true;
        found.push_back(y);
      }
    }
  return Subgroup(g.order(), std::move(found));
}

/// Smallest normal subgroup containing `seed`.
inline Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& seed) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> conjugates;
  for (Elem s : seed) {
    if (s >= g.order()) throw Error(ErrorKind::InvalidSubobject, "seed element out of range", std::to_string(s));
    for (Elem x = 0; x < g.order(); ++x) {
      Elem c = g.conj(x, s);
      if (!seen[c]) {
        seen[c] = true;
        conjugates.push_back(c);
      }
    }
  }
  return generated_subgroup(g, conjugates);
}

/// Returns a witness (x, n) with x n x^-1 outside n, if any.
inline std::optional<std::pair<Elem, Elem>> normality_witness(const FiniteGroup& g, const Subgroup& n) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y : n.elements())
      if (!n.contains(g.conj(x, y))) return std::make_pair(x, y);
  return std::nullopt;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& n) { return !normality_witness(g, n).has_value(); }

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : elements) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[g.identity()]) return false;
  for (Elem a : elements)
    for (Elem b : elements)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

/// [A,B]: normal closure of {a b a^-1 b^-1}.
inline Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seed;
  std::vector<bool> seen(g.order(), false);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      Elem c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        seed.push_back(c);
      }
    }
  return normal_closure(g, seed);
}

inline Subgroup derived_subgroup(const FiniteGroup& g) {
  auto all = whole_group(g);
  return commutator_subgroup(g, all, all);
}

inline Subgroup centre(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup(g.order(), std::move(z));
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.parent_order(), std::move(out));
}

/// Subgroup generated by a and b together (their product when one is normal).
inline Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seed = a.elements();
  seed.insert(seed.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(g, seed);
}

class GroupHom {
 public:
  GroupHom() = default;

  /// Checks the homomorphism property on all pairs.
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.order())
      throw Error(ErrorKind::MalformedInput, "image list length differs from source order");
    for (Elem y : images_)
      if (y >= target_.order()) throw Error(ErrorKind::MalformedInput, "image index out of range", std::to_string(y));
    for (Elem a = 0; a < source_.order(); ++a)
      for (Elem b = 0; b < source_.order(); ++b)
        if (images_[source_.mul(a, b)] != target_.mul(images_[a], images_[b]))
          throw Error(ErrorKind::NotHomomorphism, "map does not preserve products",
                      "(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }

  static GroupHom identity(const FiniteGroup& g) {
    std::vector<Elem> img(g.order());
    for (Elem i = 0; i < g.order(); ++i) img[i] = i;
    return unchecked(g, g, std::move(img));
  }

  /// For maps already known to be homomorphisms (composites, projections).
  static GroupHom unchecked(FiniteGroup source, FiniteGroup target, std::vector<Elem> images) {
    GroupHom h;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.images_ = std::move(images);
    return h;
  }

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Elem>& images() const noexcept { return images_; }
  Elem operator()(Elem x) const { return images_[x]; }

  Subgroup kernel() const {
    std::vector<Elem> k;
    for (Elem x = 0; x < source_.order(); ++x)
      if (images_[x] == target_.identity()) k.push_back(x);
    return Subgroup(source_.order(), std::move(k));
  }

  Subgroup image(const Subgroup& s) const {
    std::vector<Elem> im;
    for (Elem x : s.elements()) im.push_back(images_[x]);
    return Subgroup(target_.order(), std::move(im));
  }

  Subgroup image() const { return image(whole_group(source_)); }

  Subgroup preimage(const Subgroup& s) const {
    std::vector<Elem> pre;
    for (Elem x = 0; x < source_.order(); ++x)
      if (s.contains(images_[x])) pre.push_back(x);
    return Subgroup(source_.order(), std::move(pre));
  }

  bool is_surjective() const { return image().is_whole(); }
  bool is_injective() const { return kernel().is_trivial(); }
  bool is_bijective() const { return is_injective() && source_.order() == target_.order(); }

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> images_;
};

/// g after f
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) throw Error(ErrorKind::TargetMismatch, "composite of non-composable maps");
  std::vector<Elem> img(f.source().order());
  for (Elem x = 0; x < img.size(); ++x) img[x] = g(f(x));
  return GroupHom::unchecked(f.source(), g.target(), std::move(img));
}

/// A subgroup realised as a group in its own right, with its inclusion.
inline std::pair<FiniteGroup, GroupHom> subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const auto& el = h.elements();
  std::vector<std::size_t> index(g.order(), 0);
  for (std::size_t i = 0; i < el.size(); ++i) index[el[i]] = i;
  std::vector<std::vector<std::size_t>> table(el.size(), std::vector<std::size_t>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = 0; j < el.size(); ++j) {
      Elem p = g.mul(el[i], el[j]);
      if (!h.contains(p)) throw Error(ErrorKind::InvalidSubobject, "element set is not closed under products");
      table[i][j] = index[p];
    }
  std::vector<std::string> names;
  if (!g.names().empty())
    for (Elem x : el) names.push_back(g.name(x));
  auto sub = FiniteGroup::from_table(table, std::move(names));
  return {sub, GroupHom::unchecked(sub, g, el)};
}

struct QuotientGroup {
  FiniteGroup object;
  GroupHom projection;
};

/// g/n with cosets numbered by their smallest element.
inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent_order() != g.order()) throw Error(ErrorKind::InvalidSubobject, "subgroup of a different group");
  if (auto w = normality_witness(g, n))
    throw Error(ErrorKind::NotNormal, "subgroup is not normal",
                "conjugator " + std::to_string(w->first) + " element " + std::to_string(w->second));
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> coset(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : n.elements()) coset[g.mul(x, k)] = id;
  }
  std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) table[i][j] = coset[g.mul(reps[i], reps[j])];
  std::vector<std::string> names;
  if (!g.names().empty())
    for (Elem r : reps) names.push_back(g.name(r) + "N");
  auto q = FiniteGroup::from_table(table, std::move(names));
  return {q, GroupHom::unchecked(g, q, std::move(coset))};
}

/// Map out of the quotient: given q : g -> Q surjective with ker q inside
/// ker h, returns the unique hbar with hbar . q = h.
inline GroupHom descend(const GroupHom& q, const GroupHom& h) {
  if (!(q.source() == h.source())) throw Error(ErrorKind::TargetMismatch, "descend needs maps with a common source");
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> img(q.target().order(), unset);
  for (Elem x = 0; x < q.source().order(); ++x) {
    Elem c = q(x);
    if (img[c] == unset)
      img[c] = h(x);
    else if (img[c] != h(x))
      throw Error(ErrorKind::InvalidSubobject, "map does not factor through the quotient", std::to_string(x));
  }
  if (std::find(img.begin(), img.end(), unset) != img.end())
    throw Error(ErrorKind::NotSurjective, "quotient map is not surjective");
  return GroupHom::unchecked(q.target(), h.target(), std::move(img));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      table[x][y] = a.mul(x / static_cast<Elem>(b.order()), y / static_cast<Elem>(b.order())) * b.order() +
                    b.mul(x % static_cast<Elem>(b.order()), y % static_cast<Elem>(b.order()));
  std::vector<std::string> names;
  if (!a.names().empty() || !b.names().empty())
    for (Elem x = 0; x < n; ++x)
      names.push_back("(" + a.name(x / static_cast<Elem>(b.order())) + "," + b.name(x % static_cast<Elem>(b.order())) +
                      ")");
  return FiniteGroup::from_table(table, std::move(names));
}

struct GroupFiberProduct {
  FiniteGroup object;
  GroupHom p0, p1;
  std::vector<std::pair<Elem, Elem>> pairs;  // element i of `group` is pairs[i]
};

/// {(b, c) : f(b) = g(c)} ordered lexicographically, with both projections.
inline GroupFiberProduct fiber_product(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.target())) throw Error(ErrorKind::TargetMismatch, "fiber product needs a common target");
  const auto& B = f.source();
  const auto& C = g.source();
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<std::size_t> index(B.order() * C.order(), 0);
  for (Elem b = 0; b < B.order(); ++b)
    for (Elem c = 0; c < C.order(); ++c)
      if (f(b) == g(c)) {
        index[b * C.order() + c] = pairs.size();
        pairs.emplace_back(b, c);
      }
  std::vector<std::vector<std::size_t>> table(pairs.size(), std::vector<std::size_t>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      table[i][j] = index[B.mul(pairs[i].first, pairs[j].first) * C.order() + C.mul(pairs[i].second, pairs[j].second)];
  auto P = FiniteGroup::from_table(table);
  std::vector<Elem> i0, i1;
  for (auto [b, c] : pairs) {
    i0.push_back(b);
    i1.push_back(c);
  }
  return {P, GroupHom::unchecked(P, B, std::move(i0)), GroupHom::unchecked(P, C, std::move(i1)), std::move(pairs)};
}

/// The map x -> (m0 x, m1 x) into a fiber product.
inline GroupHom lift(const GroupFiberProduct& fp, const GroupHom& m0, const GroupHom& m1) {
  std::vector<Elem> img(m0.source().order());
  for (Elem x = 0; x < img.size(); ++x) {
    auto it = std::lower_bound(fp.pairs.begin(), fp.pairs.end(), std::make_pair(m0(x), m1(x)));
    if (it == fp.pairs.end() || *it != std::make_pair(m0(x), m1(x)))
      throw Error(ErrorKind::TargetMismatch, "pair does not land in the fiber product");
    img[x] = static_cast<Elem>(it - fp.pairs.begin());
  }
  return GroupHom::unchecked(m0.source(), fp.object, std::move(img));
}

/// Greedy generating set: repeatedly add the element that enlarges the
/// generated subgroup the most (ties broken by index).
inline std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup h = trivial_subgroup(g);
  while (!h.is_whole()) {
    Elem best = 0;
    std::size_t best_size = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      auto seed = gens;
      seed.push_back(x);
      std::size_t s = generated_subgroup(g, seed).order();
      if (s > best_size) {
        best_size = s;
        best = x;
      }
    }
    gens.push_back(best);
    h = generated_subgroup(g, gens);
  }
  return gens;
}

inline constexpr std::size_t kDefaultHomGuard = 256;

/// All homomorphisms src -> dst with the given forced images, by backtracking
/// over images of a greedy generating set. Output order is lexicographic in
/// the generator images.
inline std::vector<GroupHom> enumerate_homs(const FiniteGroup& src, const FiniteGroup& dst,
                                            const std::vector<std::pair<Elem, Elem>>& constraints = {},
                                            std::size_t guard = kDefaultHomGuard) {
  if (src.order() > guard)
    throw Error(ErrorKind::SizeGuardExceeded, "source group too large for homomorphism enumeration",
                std::to_string(src.order()) + " > " + std::to_string(guard));
  for (auto [x, y] : constraints)
    if (x >= src.order() || y >= dst.order()) throw Error(ErrorKind::MalformedInput, "constraint out of range");
  const auto gens = greedy_generators(src);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t ord = src.element_order(gens[i]);
    std::optional<Elem> forced;
    for (auto [x, y] : constraints)
      if (x == gens[i]) forced = y;
    for (Elem y = 0; y < dst.order(); ++y)
      if ((!forced || *forced == y) && ord % dst.element_order(y) == 0) candidates[i].push_back(y);
  }
  std::vector<GroupHom> out;
  std::vector<Elem> choice(gens.size());
  constexpr Elem unset = static_cast<Elem>(-1);

  auto extend = [&]() -> std::optional<std::vector<Elem>> {
    std::vector<Elem> img(src.order(), unset);
    img[src.identity()] = dst.identity();
    std::deque<Elem> queue{src.identity()};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem y = src.mul(x, gens[i]);
        Elem v = dst.mul(img[x], choice[i]);
        if (img[y] == unset) {
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          return std::nullopt;
        }
      }
    }
    for (auto [x, y] : constraints)
      if (img[x] != y) return std::nullopt;
    return img;
  };

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      if (auto img = extend()) out.push_back(GroupHom::unchecked(src, dst, std::move(*img)));
      return;
    }
    for (Elem y : candidates[depth]) {
      choice[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace birkhoff
