#pragma once

// Batch front end: one Job in, one JSON report out. The variety is always
// named explicitly by the caller; nothing is inferred from the input.

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"

#include "birkhoff/engine.hpp"
#include "birkhoff/group_variety.hpp"
#include "birkhoff/homology.hpp"
#include "birkhoff/io.hpp"
#include "birkhoff/leib_variety.hpp"
#include "birkhoff/xmod.hpp"

namespace birkhoff::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check",   "reflect", "commutator", "classify", "centralise",
                                              "homology", "uce",    "five-term",  "compare",  "certify"};
  return names;
}

inline const std::vector<std::string>& variety_names() {
  static const std::vector<std::string> names{"group-ab", "leib-lie", "leib-vect", "lie-vect",
                                              "pxm-xmod", "pxm-ab",   "xmod-ab"};
  return names;
}

struct Job {
  std::string command;
  std::string variety;
  std::vector<std::string> inputs;
  std::size_t guard = kDefaultHomGuard;
};

struct Outcome {
  json report;
  int exit_code = 0;
};

using AnyVariety = std::variant<GroupVariety, LeibVariety, PxmVariety>;

inline AnyVariety variety_from_name(const std::string& name) {
  if (name == "group-ab") return GroupVariety{};
  if (name == "leib-lie") return LeibVariety::leib_lie();
  if (name == "leib-vect") return LeibVariety::leib_vect();
  if (name == "lie-vect") return LeibVariety::lie_vect();
  if (name == "pxm-xmod") return PxmVariety{PxmReflector::Peiff};
  if (name == "pxm-ab") return PxmVariety{PxmReflector::AbPeiff};
  if (name == "xmod-ab") return PxmVariety{PxmReflector::Ab};
  throw Error(ErrorKind::ParseError, "unknown variety", name);
}

namespace detail {

// ---- object parsing, one overload per variety

inline FiniteGroup parse_object(const GroupVariety&, const json& j, const std::string& locus) {
  return io::parse_group(j, locus);
}
inline LeibnizAlgebra parse_object(const LeibVariety&, const json& j, const std::string& locus) {
  return io::parse_algebra(j, locus);
}
inline PrecrossedModule parse_object(const PxmVariety&, const json& j, const std::string& locus) {
  return io::parse_pxm(j, locus);
}

inline json object_json(const FiniteGroup& g) { return io::to_json(g); }
inline json object_json(const LeibnizAlgebra& g) { return io::to_json(g); }
inline json object_json(const PrecrossedModule& x) { return io::to_json(x); }

inline json morphism_json(const GroupHom& f) { return f.images(); }
inline json morphism_json(const AlgebraHom& f) { return io::to_json(f.matrix()); }
inline json morphism_json(const XModHom& f) { return {{"f1", f.f1().images()}, {"f0", f.f0().images()}}; }

inline std::size_t object_size(const FiniteGroup& g) { return g.order(); }
inline std::size_t object_size(const LeibnizAlgebra& g) { return g.dim(); }
inline std::size_t object_size(const PrecrossedModule& x) { return x.t_group().order() * x.g_group().order(); }

/// Rejects objects outside the ambient variety.
inline void require_member(const GroupVariety&, const FiniteGroup&) {}

inline void require_member(const LeibVariety& v, const LeibnizAlgebra& g) {
  if (v.lie_ambient)
    require_lie(g);
  else
    require_leibniz(g);
}

inline void require_member(const PxmVariety& v, const PrecrossedModule& x) {
  auto val = validate_pxm(x);
  const bool ok = v.reflector == PxmReflector::Ab ? val.is_crossed : val.is_precrossed;
  if (!ok)
    throw Error(ErrorKind::MalformedInput,
                v.reflector == PxmReflector::Ab ? "not a crossed module" : "not a precrossed module", val.witness.dump());
}

template <Variety V>
typename V::Object member(const V& v, const json& j, const std::string& locus) {
  auto x = parse_object(v, j, locus);
  require_member(v, x);
  return x;
}

// ---- morphism and extension parsing

inline GroupHom parse_morphism(const GroupVariety&, const FiniteGroup& s, const FiniteGroup& t, const json& j,
                               const std::string& locus) {
  auto imgs = io::detail::elem_list(j, locus);
  return io::detail::located(locus, [&] { return GroupHom(s, t, imgs); });
}

inline AlgebraHom parse_morphism(const LeibVariety&, const LeibnizAlgebra& s, const LeibnizAlgebra& t, const json& j,
                                 const std::string& locus) {
  auto m = io::parse_matrix(j, t.dim(), s.dim(), locus);
  return io::detail::located(locus, [&] { return AlgebraHom(s, t, m); });
}

inline XModHom parse_morphism(const PxmVariety&, const PrecrossedModule& s, const PrecrossedModule& t, const json& j,
                              const std::string& locus) {
  auto f1 = io::detail::elem_list(io::detail::field(j, "f1", locus), locus + "/f1");
  auto f0 = io::detail::elem_list(io::detail::field(j, "f0", locus), locus + "/f0");
  return io::detail::located(locus, [&] {
    return XModHom(s, t, GroupHom(s.t_group(), t.t_group(), f1), GroupHom(s.g_group(), t.g_group(), f0));
  });
}

/// The quotient map by the smallest admissible kernel containing the seeds.
inline GroupHom quotient_by_seeds(const GroupVariety&, const FiniteGroup& b, const json& j, const std::string& locus) {
  auto seeds = io::detail::elem_list(j, locus);
  for (Elem s : seeds)
    if (s >= b.order()) io::detail::parse_fail(locus, "kernel seed out of range");
  return quotient_group(b, normal_closure(b, seeds)).projection;
}

inline AlgebraHom quotient_by_seeds(const LeibVariety&, const LeibnizAlgebra& b, const json& j,
                                    const std::string& locus) {
  if (!j.is_array()) io::detail::parse_fail(locus, "expected an array of vectors");
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < j.size(); ++i) gens.push_back(io::detail::vector(j[i], b.dim(), locus + "/" + std::to_string(i)));
  return quotient_algebra(b, ideal_generated(b, Subspace::span(b.dim(), gens))).projection;
}

inline XModHom quotient_by_seeds(const PxmVariety&, const PrecrossedModule& b, const json& j,
                                 const std::string& locus) {
  auto ts = io::detail::elem_list(io::detail::field(j, "T", locus), locus + "/T");
  auto gs = io::detail::elem_list(io::detail::field(j, "G", locus), locus + "/G");
  for (Elem t : ts)
    if (t >= b.t_group().order()) io::detail::parse_fail(locus + "/T", "kernel seed out of range");
  for (Elem g : gs)
    if (g >= b.g_group().order()) io::detail::parse_fail(locus + "/G", "kernel seed out of range");
  return quotient_pxm(b, normal_pxsub_closure(b, ts, gs)).projection;
}

template <Variety V>
struct ParsedExtension {
  Extension<V> ext;
  std::optional<typename V::Morphism> section;
};

/// {"domain", "codomain", <map>} or {"domain", "kernel": seeds}, with an
/// optional "section". The map key is "map" for groups, "matrix" for
/// algebras and "morphism" for precrossed modules.
template <Variety V>
ParsedExtension<V> parse_extension(const V& v, const json& j, const std::string& locus) {
  auto b = member(v, io::detail::field(j, "domain", locus), locus + "/domain");
  typename V::Morphism map;
  if (j.contains("kernel")) {
    map = quotient_by_seeds(v, b, j["kernel"], locus + "/kernel");
  } else {
    auto a = member(v, io::detail::field(j, "codomain", locus), locus + "/codomain");
    std::string key = std::is_same_v<V, GroupVariety> ? "map" : std::is_same_v<V, LeibVariety> ? "matrix" : "morphism";
    map = parse_morphism(v, b, a, io::detail::field(j, key, locus), locus + "/" + key);
  }
  ParsedExtension<V> out{io::detail::located(locus, [&] { return make_extension(v, map); }), std::nullopt};
  if (j.contains("section"))
    out.section = parse_morphism(v, v.target(map), b, j["section"], locus + "/section");
  return out;
}

template <Variety V>
json extension_json(const V& v, const Extension<V>& f) {
  return {{"domain_size", object_size(v.source(f.map))},
          {"codomain_size", object_size(v.target(f.map))},
          {"kernel", v.to_json(f.kernel)}};
}

inline json located_input(const Job& job, std::size_t i) {
  if (i >= job.inputs.size()) throw Error(ErrorKind::ParseError, "missing input file", "input " + std::to_string(i));
  return io::read_json_file(job.inputs[i]);
}

/// Parses input i with the file name prefixed to any locus.
template <class F>
auto from_input(const Job& job, std::size_t i, F&& parse) {
  json j = located_input(job, i);
  try {
    return parse(j);
  } catch (const Error& e) {
    throw Error(e.kind(), e.message(), job.inputs[i] + "#" + e.witness());
  }
}

inline void require_inputs(const Job& job, std::size_t n) {
  if (job.inputs.size() < n)
    throw Error(ErrorKind::ParseError, "command needs " + std::to_string(n) + " input file(s)", job.command);
}

struct Body {
  json results = json::object();
  std::vector<Check> checks;
};

inline void append(std::vector<Check>& to, std::vector<Check> from, const std::string& prefix = "") {
  for (auto& c : from) {
    if (!prefix.empty()) c.name = prefix + c.name;
    to.push_back(std::move(c));
  }
}

// ---- commands

template <Variety V>
Body cmd_check(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto x = from_input(job, 0, [&](const json& j) { return parse_object(v, j, ""); });
  Body b;
  bool ok = true;
  json witness = nullptr;
  if constexpr (std::is_same_v<V, GroupVariety>) {
    b.results = {{"order", x.order()}, {"abelian", x.is_abelian()}};
  } else if constexpr (std::is_same_v<V, LeibVariety>) {
    const auto& val = x.validation();
    b.results = {{"dim", x.dim()}, {"is_leibniz", val.is_leibniz}, {"is_lie", val.is_lie},
                 {"witness", val.witness ? json(val.witness->describe()) : json(nullptr)}};
    ok = v.lie_ambient ? val.is_lie : val.is_leibniz;
    witness = b.results["witness"];
  } else {
    auto val = validate_pxm(x);
    b.results = {{"T_order", x.t_group().order()}, {"G_order", x.g_group().order()},
                 {"is_precrossed", val.is_precrossed}, {"is_crossed", val.is_crossed}, {"witness", val.witness}};
    ok = v.reflector == PxmReflector::Ab ? val.is_crossed : val.is_precrossed;
    witness = val.witness;
  }
  b.results["in_variety"] = ok;
  b.results["in_subvariety"] = ok && v.in_subvariety(x);
  b.checks.push_back(Check::verdict("in_variety", ok, witness.is_null() ? json("identity fails") : witness));
  return b;
}

template <Variety V>
Body cmd_reflect(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto x = from_input(job, 0, [&](const json& j) { return member(v, j, ""); });
  auto r = reflect(v, x);
  Body b;
  b.results = {{"unit_kernel", v.to_json(v.unit_kernel(x))},
               {"reflection", object_json(r.object)},
               {"unit", morphism_json(r.unit)},
               {"perfect", is_perfect(v, x)}};
  b.checks.push_back(Check::verdict("reflection_in_subvariety", v.in_subvariety(r.object), "reflection is outside"));
  auto again = reflect(v, r.object);
  b.checks.push_back(Check::verdict("reflection_is_idempotent", is_bijective(v, again.unit), "unit of the reflection is not bijective"));
  return b;
}

template <Variety V>
std::vector<Check> commutator_oracles(const V& v, const Extension<V>& f, const typename V::Subobject& rc) {
  std::vector<Check> out;
  const auto B = v.source(f.map);
  if constexpr (std::is_same_v<V, GroupVariety>) {
    auto cl = classical_commutator(B, f.kernel);
    out.push_back(Check::verdict("equals_classical_commutator", v.equal(cl, rc),
                                 {{"classical", v.to_json(cl)}, {"relative", v.to_json(rc)}}));
  } else if constexpr (std::is_same_v<V, LeibVariety>) {
    if (v.reflector == AlgebraReflector::Lie) {
      auto lc = lie_centrality(f);
      out.push_back(Check::verdict("lie_centrality_conditions_agree", lc.agree(),
                                   {{"central", lc.central}, {"kernel_pair_ann", lc.kernel_pair_ann},
                                    {"kernel_in_z_lie", lc.kernel_in_z_lie}}));
    } else {
      auto cl = classical_commutator(B, f.kernel);
      out.push_back(Check::verdict("equals_classical_commutator", v.equal(cl, rc),
                                   {{"classical", v.to_json(cl)}, {"relative", v.to_json(rc)}}));
    }
  } else {
    if (v.reflector == PxmReflector::Peiff) {
      auto pk = peiffer_commutator(B, f.kernel, whole_pxsub(B));
      out.push_back(Check::verdict("central_iff_peiffer_kb_trivial", v.is_zero(rc) == pk.is_trivial(),
                                   {{"relative", v.to_json(rc)}, {"peiffer_kb", birkhoff::to_json(pk)}}));
    } else {
      out.push_back(Check::skip("classical_oracle", "no independent commutator formula for this reflector"));
    }
  }
  return out;
}

template <Variety V>
Body cmd_commutator(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto p = from_input(job, 0, [&](const json& j) { return parse_extension(v, j, ""); });
  auto rc = relative_commutator(v, p.ext);
  Body b;
  b.results = {{"extension", extension_json(v, p.ext)}, {"relative_commutator", v.to_json(rc)}};
  b.checks = commutator_oracles(v, p.ext, rc);
  b.checks.push_back(Check::verdict("commutator_inside_kernel", v.contains(p.ext.kernel, rc), v.to_json(rc)));
  return b;
}

template <Variety V>
Body cmd_classify(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto p = from_input(job, 0, [&](const json& j) { return parse_extension(v, j, ""); });
  auto r = classify_extension(v, p.ext, p.section, job.guard);
  Body b;
  b.results = {{"extension", extension_json(v, p.ext)},
               {"relative_commutator", v.to_json(r.relative_commutator)},
               {"central", r.central},
               {"trivial", r.trivial},
               {"normal", r.normal},
               {"split", r.split ? json(*r.split) : json(nullptr)}};
  b.checks = std::move(r.checks);
  if constexpr (std::is_same_v<V, PxmVariety>) {
    if (v.reflector == PxmReflector::Peiff) {
      auto c = centrality_equiv(p.ext.map);
      b.results["centrality_conditions"] = {{"central", c.central},
                                            {"kernel_pair_peiffer", c.kernel_pair_peiffer},
                                            {"peiffer_orders", c.peiffer_orders},
                                            {"kernel_in_z_t", c.kernel_in_z_t},
                                            {"kernel_in_z", c.kernel_in_z},
                                            {"peiffer_kb_trivial", c.peiffer_kb_trivial}};
      b.checks.push_back(Check::verdict("centrality_conditions_agree", c.agree(), b.results["centrality_conditions"]));
    }
  }
  if constexpr (std::is_same_v<V, LeibVariety>) {
    if (v.reflector == AlgebraReflector::Lie) {
      auto c = lie_centrality(p.ext);
      b.results["centrality_conditions"] = {
          {"central", c.central}, {"kernel_pair_ann", c.kernel_pair_ann}, {"kernel_in_z_lie", c.kernel_in_z_lie}};
      b.checks.push_back(Check::verdict("centrality_conditions_agree", c.agree(), b.results["centrality_conditions"]));
    }
  }
  return b;
}

template <Variety V>
Body cmd_centralise(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto p = from_input(job, 0, [&](const json& j) { return parse_extension(v, j, ""); });
  auto c = centralise(v, p.ext);
  Body b;
  b.results = {{"extension", extension_json(v, p.ext)},
               {"relative_commutator", v.to_json(relative_commutator(v, p.ext))},
               {"centralised", object_json(v.source(c.central.map))},
               {"centralised_map", morphism_json(c.central.map)},
               {"centralised_kernel", v.to_json(c.central.kernel)}};
  b.checks = std::move(c.checks);
  auto twice = centralise(v, c.central);
  b.checks.push_back(Check::verdict("centralising_twice_changes_nothing", is_bijective(v, twice.unit),
                                    "second centralisation has a non-trivial unit"));
  return b;
}

inline UceKind uce_kind(const LeibVariety& v) {
  if (v.reflector == AlgebraReflector::Lie)
    throw Error(ErrorKind::UnsupportedHomology, "no second homology relative to Lie is available", "leib-lie");
  return v.lie_ambient ? UceKind::LieVsVect : UceKind::LeibVsVectLie;
}

inline Body cmd_homology(const LeibVariety& v, const Job& job) {
  require_inputs(job, 1);
  const auto kind = uce_kind(v);
  auto g = from_input(job, 0, [&](const json& j) { return member(v, j, ""); });
  auto h = kind == UceKind::LieVsVect ? ce_h2(g) : loday_hl2(g);
  Body b;
  b.results = {{"flavor", to_string(h.chain.flavor)},
               {"h1", h1(g, v.reflector)},
               {"h2", h.dim},
               {"degree2_dim", h.chain.degree2_dim},
               {"degree3_dim", h.chain.degree3_dim},
               {"rank_d2", h.rank_d2},
               {"rank_d3", h.rank_d3}};
  const RatMatrix dd = h.chain.d2 * h.chain.d3;
  b.checks.push_back(Check::verdict("d2_after_d3_is_zero", dd == RatMatrix(dd.rows(), dd.cols()), "d2 d3 != 0"));
  b.checks.push_back(Check::verdict("rank_nullity", h.dim + h.rank_d2 + h.rank_d3 == h.chain.degree2_dim,
                                    {{"h2", h.dim}, {"rank_d2", h.rank_d2}, {"rank_d3", h.rank_d3}}));
  return b;
}

inline Body cmd_uce(const LeibVariety& v, const Job& job) {
  require_inputs(job, 1);
  const auto kind = uce_kind(v);
  auto g = from_input(job, 0, [&](const json& j) { return member(v, j, ""); });
  auto u = uce_construct(g, kind);
  Body b;
  b.results = {{"kind", to_string(kind)},
               {"kernel_dim", u.kernel.dim()},
               {"h2_dim", u.h2_dim},
               {"total", io::to_json(u.total)},
               {"projection", io::to_json(u.projection.matrix())}};
  b.checks = std::move(u.checks);
  auto cert = homological_certificate(kind, make_extension(variety_of(kind), u.projection));
  b.results["certificate"] = {{"central", cert.central}, {"h1", cert.h1}, {"h2", cert.h2}, {"universal", cert.universal()}};
  b.checks.push_back(Check::verdict("certificate", cert.universal(), b.results["certificate"]));
  return b;
}

template <Variety V>
Body cmd_five_term(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto p = from_input(job, 0, [&](const json& j) { return parse_extension(v, j, ""); });
  Body b;
  if constexpr (std::is_same_v<V, LeibVariety>) {
    uce_kind(v);
    auto r = five_term_report(v, p.ext);
    b.results = {{"h2_b", r.h2_b}, {"h2_a", r.h2_a}, {"k_mod_kb", r.k_mod}, {"h1_b", r.h1_b}, {"h1_a", r.h1_a}};
    b.checks = std::move(r.checks);
  } else {
    auto t = three_term_tail(v, p.ext);
    b.results = {{"kernel", v.to_json(t.kernel)},
                 {"relative_commutator", v.to_json(t.relative_commutator)},
                 {"image_of_kernel", v.to_json(t.image_of_kernel)},
                 {"kernel_of_reflection", v.to_json(t.kernel_of_reflection)}};
    b.checks = std::move(t.checks);
    b.checks.push_back(Check::skip("degree_two_terms", "second homology is only computed for algebras"));
  }
  return b;
}

inline Body cmd_compare(const LeibVariety& v, const Job& job) {
  require_inputs(job, 1);
  if (v.reflector == AlgebraReflector::Lie)
    throw Error(ErrorKind::UnsupportedHomology, "comparison runs over the vect reflectors", "leib-lie");
  auto g = from_input(job, 0, [&](const json& j) { return parse_object(v, j, ""); });
  const auto lie = LeibVariety::lie_vect();
  std::vector<AlgebraHom> samples;
  for (std::size_t i = 1; i < job.inputs.size(); ++i)
    samples.push_back(from_input(job, i, [&](const json& j) { return parse_extension(lie, j, ""); }).ext.map);
  auto r = comparison_report(g, samples);
  Body b;
  b.results = {{"hl2", r.hl2}, {"h2", r.h2}, {"hl2_uce", r.hl2_uce}, {"samples", samples.size()}};
  b.checks = std::move(r.checks);
  return b;
}

/// Input 0 is the candidate u, the remaining inputs form the test family.
template <Variety V>
Body cmd_certify(const V& v, const Job& job) {
  require_inputs(job, 1);
  auto u = from_input(job, 0, [&](const json& j) { return parse_extension(v, j, ""); }).ext;
  Body b;
  if constexpr (std::is_same_v<V, LeibVariety>) {
    const auto kind = uce_kind(v);
    auto cert = homological_certificate(kind, u);
    b.results = {{"central", cert.central}, {"h1", cert.h1}, {"h2", cert.h2}, {"universal", cert.universal()}};
    b.checks.push_back(Check::verdict("u_is_central", cert.central, "u is not central"));
    b.checks.push_back(Check::verdict("domain_h1_vanishes", cert.h1 == 0, {{"h1", cert.h1}}));
    b.checks.push_back(Check::verdict("domain_h2_vanishes", cert.h2 == 0, {{"h2", cert.h2}}));
  } else {
    std::vector<Extension<V>> family;
    for (std::size_t i = 1; i < job.inputs.size(); ++i)
      family.push_back(from_input(job, i, [&](const json& j) { return parse_extension(v, j, ""); }).ext);
    auto cert = universality_certificate(v, u, family, job.guard);
    json facs = json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& fac = cert.factorizations[i];
      facs.push_back({{"count", fac.count}, {"exists", fac.exists()}, {"unique", fac.unique()}});
      if (is_central(v, family[i]))
        b.checks.push_back(Check::verdict("family[" + std::to_string(i) + "]_factorization_exists", fac.exists(),
                                          {{"count", fac.count}}));
    }
    b.results = {{"perfect", cert.perfect}, {"factorizations", facs}};
    append(b.checks, std::move(cert.checks));
    b.checks.push_back(Check::verdict("domain_is_perfect", cert.perfect, "domain of u is not perfect"));
  }
  return b;
}

template <Variety V>
Body dispatch(const V& v, const Job& job) {
  const auto& c = job.command;
  if (c == "check") return cmd_check(v, job);
  if (c == "reflect") return cmd_reflect(v, job);
  if (c == "commutator") return cmd_commutator(v, job);
  if (c == "classify") return cmd_classify(v, job);
  if (c == "centralise") return cmd_centralise(v, job);
  if (c == "five-term") return cmd_five_term(v, job);
  if (c == "certify") return cmd_certify(v, job);
  if (c == "homology" || c == "uce" || c == "compare") {
    if constexpr (std::is_same_v<V, LeibVariety>) {
      if (c == "homology") return cmd_homology(v, job);
      if (c == "uce") return cmd_uce(v, job);
      return cmd_compare(v, job);
    } else {
      throw Error(ErrorKind::UnsupportedHomology, "command needs an algebra variety", c + " with " + v.name());
    }
  }
  throw Error(ErrorKind::ParseError, "unknown command", c);
}

inline json job_echo(const Job& job) {
  return {{"command", job.command}, {"variety", job.variety}, {"inputs", job.inputs}, {"guard_size", job.guard}};
}

}  // namespace detail

/// Runs one job. Input problems give exit code 2 and an error report; a
/// construction that breaks its own postconditions is a failed check (1).
inline Outcome run(const Job& job) {
  try {
    const auto variety = variety_from_name(job.variety);
    auto body = std::visit([&](const auto& v) { return detail::dispatch(v, job); }, variety);
    const bool ok = all_passed(body.checks);
    json report{{"schema_version", kSchemaVersion},
                {"job", detail::job_echo(job)},
                {"results", std::move(body.results)},
                {"checks", to_json(body.checks)},
                {"status", ok ? "pass" : "fail"}};
    return {std::move(report), ok ? 0 : 1};
  } catch (const Error& e) {
    const bool broken = e.kind() == ErrorKind::WellDefinednessFailure || e.kind() == ErrorKind::VarietyIdentityFailure;
    json report{{"schema_version", kSchemaVersion},
                {"job", detail::job_echo(job)},
                {"error", {{"kind", to_string(e.kind())}, {"message", e.message()}, {"witness", e.witness()}}},
                {"status", broken ? "fail" : "error"}};
    return {std::move(report), broken ? 1 : 2};
  }
}

// ---- selftest

/// A corpus case is a *.case.json file:
///   {"command", "variety", "inputs": [paths relative to the case file],
///    "expect": {json-pointer: value}, "exit": expected exit code}
/// Each case becomes one check named after the file.
inline Outcome selftest(const std::filesystem::path& corpus) {
  namespace fs = std::filesystem;
  std::vector<fs::path> cases;
  if (fs::is_directory(corpus))
    for (const auto& entry : fs::directory_iterator(corpus)) {
      const auto name = entry.path().filename().string();
      if (entry.is_regular_file() && name.size() > 10 && name.ends_with(".case.json")) cases.push_back(entry.path());
    }
  std::sort(cases.begin(), cases.end());

  std::vector<Check> checks;
  for (const auto& path : cases) {
    const std::string name = path.filename().string().substr(0, path.filename().string().size() - 10);
    try {
      json c = io::read_json_file(path.string());
      Job job;
      job.command = c.at("command").get<std::string>();
      job.variety = c.at("variety").get<std::string>();
      for (const auto& in : c.at("inputs")) job.inputs.push_back((path.parent_path() / in.get<std::string>()).string());
      if (c.contains("guard_size")) job.guard = c["guard_size"].get<std::size_t>();
      auto out = run(job);
      json mismatch = nullptr;
      const int want_exit = c.value("exit", 0);
      if (out.exit_code != want_exit)
        mismatch = {{"pointer", "exit"}, {"expected", want_exit}, {"actual", out.exit_code}};
      const json expect = c.value("expect", json::object());
      for (const auto& [ptr, expected] : expect.items()) {
        if (!mismatch.is_null()) break;
        const json::json_pointer p(ptr);
        json actual = out.report.contains(p) ? out.report.at(p) : json(nullptr);
        if (actual != expected) mismatch = {{"pointer", ptr}, {"expected", expected}, {"actual", actual}};
      }
      checks.push_back(Check::verdict(name, mismatch.is_null(), mismatch));
    } catch (const std::exception& e) {
      checks.push_back(Check::verdict(name, false, {{"malformed_case", e.what()}}));
    }
  }
  const bool ok = all_passed(checks);
  json report{{"schema_version", kSchemaVersion},
              {"job", {{"command", "selftest"}}},
              {"results", {{"cases", cases.size()}}},
              {"checks", to_json(checks)},
              {"status", ok ? "pass" : "fail"}};
  return {std::move(report), ok ? 0 : 1};
}

// ---- text view

namespace detail {

inline std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline void render_value(std::ostringstream& out, const std::string& key, const json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) render_value(out, k, v, depth + 1);
  } else {
    out << pad << key << ": " << scalar(j) << "\n";
  }
}

}  // namespace detail

/// Human-readable rendering of a report; carries the same data as the JSON.
inline std::string render_pretty(const json& report) {
  std::ostringstream out;
  const auto& job = report.at("job");
  out << job.value("command", "") << (job.contains("variety") ? " [" + job["variety"].get<std::string>() + "]" : "")
      << ": " << report.value("status", "") << "\n";
  if (report.contains("error")) {
    const auto& e = report["error"];
    out << "error " << detail::scalar(e["kind"]) << ": " << detail::scalar(e["message"]);
    if (!e["witness"].get<std::string>().empty()) out << " (" << detail::scalar(e["witness"]) << ")";
    out << "\n";
    return out.str();
  }
  if (report.contains("results") && !report["results"].empty()) {
    out << "results:\n";
    for (const auto& [k, v] : report["results"].items()) detail::render_value(out, k, v, 1);
  }
  if (report.contains("checks")) {
    out << "checks:\n";
    for (const auto& c : report["checks"]) {
      out << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>();
      if (!c["witness"].is_null()) out << "  " << detail::scalar(c["witness"]);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace birkhoff::cli
