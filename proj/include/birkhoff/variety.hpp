#pragma once

// The contract a concrete variety implements so the generic engine can run.
// Subobjects are opaque to the engine: it only asks the variety to intersect
// them, push them forward, compare them and quotient by them.

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "birkhoff/error.hpp"

namespace birkhoff {

template <class V>
concept Variety = requires(const V& v, const typename V::Object& x, const typename V::Morphism& f,
                           const typename V::Subobject& s, const typename V::FiberProduct& fp) {
  { v.name() } -> std::convertible_to<std::string>;
  { v.source(f) } -> std::convertible_to<typename V::Object>;
  { v.target(f) } -> std::convertible_to<typename V::Object>;
  { v.identity(x) } -> std::convertible_to<typename V::Morphism>;
  { v.compose(f, f) } -> std::convertible_to<typename V::Morphism>;  // compose(g, f) = g after f
  { v.kernel(f) } -> std::convertible_to<typename V::Subobject>;
  { v.unit_kernel(x) } -> std::convertible_to<typename V::Subobject>;  // [X,X]_B
  { v.whole(x) } -> std::convertible_to<typename V::Subobject>;
  { v.intersect(s, s) } -> std::convertible_to<typename V::Subobject>;
  { v.image(f, s) } -> std::convertible_to<typename V::Subobject>;
  { v.preimage(f, s) } -> std::convertible_to<typename V::Subobject>;
  { v.quotient(x, s) } -> std::convertible_to<typename V::Quotient>;
  { v.descend(f, f) } -> std::convertible_to<typename V::Morphism>;
  { v.fiber_product(f, f) } -> std::convertible_to<typename V::FiberProduct>;
  { v.lift(fp, f, f) } -> std::convertible_to<typename V::Morphism>;
  { v.is_zero(s) } -> std::convertible_to<bool>;
  { v.equal(s, s) } -> std::convertible_to<bool>;
  { v.contains(s, s) } -> std::convertible_to<bool>;
  { v.is_surjective(f) } -> std::convertible_to<bool>;
  { v.is_injective(f) } -> std::convertible_to<bool>;
  { v.in_variety(x) } -> std::convertible_to<bool>;
  { v.in_subvariety(x) } -> std::convertible_to<bool>;
  { v.same_morphism(f, f) } -> std::convertible_to<bool>;
  { v.to_json(s) } -> std::convertible_to<nlohmann::json>;
  { fp.object } -> std::convertible_to<typename V::Object>;
  { fp.p0 } -> std::convertible_to<typename V::Morphism>;
  { fp.p1 } -> std::convertible_to<typename V::Morphism>;
};

/// Varieties over finite objects can enumerate homomorphisms.
template <class V>
concept EnumerableVariety =
    Variety<V> && requires(const V& v, const typename V::Object& x, std::size_t guard) {
      { v.enumerate_homs(x, x, guard) } -> std::convertible_to<std::vector<typename V::Morphism>>;
    };

/// A surjective morphism together with its kernel.
template <Variety V>
struct Extension {
  typename V::Morphism map;
  typename V::Subobject kernel;
};

template <Variety V>
Extension<V> make_extension(const V& v, typename V::Morphism map) {
  if (!v.is_surjective(map)) throw Error(ErrorKind::NotSurjective, "an extension must be surjective");
  auto k = v.kernel(map);
  return {std::move(map), std::move(k)};
}

template <Variety V>
bool is_bijective(const V& v, const typename V::Morphism& f) {
  return v.is_injective(f) && v.is_surjective(f);
}

enum class Status { Pass, Fail, Skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "";
}

/// One verified property. A failing check always carries a witness.
struct Check {
  std::string name;
  Status status = Status::Skip;
  nlohmann::json witness;

  static Check verdict(std::string name, bool ok, nlohmann::json witness_if_failed) {
    if (ok) return {std::move(name), Status::Pass, nullptr};
    return {std::move(name), Status::Fail, std::move(witness_if_failed)};
  }
  static Check skip(std::string name, std::string reason) { return {std::move(name), Status::Skip, std::move(reason)}; }
};

inline nlohmann::json to_json(const Check& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
}

inline nlohmann::json to_json(const std::vector<Check>& checks) {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

}  // namespace birkhoff
