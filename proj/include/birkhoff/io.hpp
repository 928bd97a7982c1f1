#pragma once

// JSON formats for groups, algebras, precrossed modules and extensions.
// Parse errors name the offending field as a JSON pointer.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "birkhoff/leib.hpp"
#include "birkhoff/xmod.hpp"

namespace birkhoff::io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& locus, const std::string& what) {
  throw Error(ErrorKind::ParseError, what, locus);
}

inline const json& field(const json& j, const std::string& key, const std::string& locus) {
  if (!j.is_object()) parse_fail(locus, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(locus + "/" + key, "missing field");
  return *it;
}

inline std::size_t index(const json& j, const std::string& locus) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_fail(locus, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::vector<std::size_t> index_list(const json& j, const std::string& locus) {
  if (!j.is_array()) parse_fail(locus, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(index(j[i], locus + "/" + std::to_string(i)));
  return out;
}

inline std::vector<Elem> elem_list(const json& j, const std::string& locus) {
  auto v = index_list(j, locus);
  return std::vector<Elem>(v.begin(), v.end());
}

inline Rational rational(const json& j, const std::string& locus) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) parse_fail(locus, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(locus, e.message());
  }
}

inline Vector vector(const json& j, std::size_t n, const std::string& locus) {
  if (!j.is_array() || j.size() != n) parse_fail(locus, "expected a vector of length " + std::to_string(n));
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rational(j[i], locus + "/" + std::to_string(i)));
  return v;
}

inline std::vector<std::string> names(const json& j, const std::string& key, const std::string& locus) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const auto& a = j.at(key);
  if (!a.is_array()) parse_fail(locus + "/" + key, "expected an array of strings");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_string()) parse_fail(locus + "/" + key + "/" + std::to_string(i), "expected a string");
    out.push_back(a[i].get<std::string>());
  }
  return out;
}

/// Re-raises construction errors with the locus attached when none is set.
template <class F>
auto located(const std::string& locus, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (!e.witness().empty()) throw;
    throw Error(e.kind(), e.message(), locus);
  }
}

}  // namespace detail

// ---- groups

inline FiniteGroup parse_group(const json& j, const std::string& locus = "") {
  const auto& t = detail::field(j, "table", locus);
  if (!t.is_array()) detail::parse_fail(locus + "/table", "expected an array of rows");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < t.size(); ++i)
    table.push_back(detail::index_list(t[i], locus + "/table/" + std::to_string(i)));
  if (j.contains("order") && detail::index(j["order"], locus + "/order") != table.size())
    detail::parse_fail(locus + "/order", "order differs from the number of table rows");
  auto names = detail::names(j, "names", locus);
  return detail::located(locus, [&] { return FiniteGroup::from_table(table, names); });
}

inline json to_json(const FiniteGroup& g) {
  json j{{"order", g.order()}, {"table", g.table()}};
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

// ---- algebras

inline LeibnizAlgebra parse_algebra(const json& j, const std::string& locus = "") {
  const std::size_t n = detail::index(detail::field(j, "dim", locus), locus + "/dim");
  auto names = detail::names(j, "basis", locus);
  if (!names.empty() && names.size() != n) detail::parse_fail(locus + "/basis", "basis name count differs from dim");
  std::vector<Rational> c(n * n * n, Rational(0));
  if (j.contains("brackets")) {
    const auto& b = j["brackets"];
    if (!b.is_array()) detail::parse_fail(locus + "/brackets", "expected an array");
    std::vector<bool> seen(n * n, false);
    for (std::size_t e = 0; e < b.size(); ++e) {
      const std::string at = locus + "/brackets/" + std::to_string(e);
      const std::size_t l = detail::index(detail::field(b[e], "left", at), at + "/left");
      const std::size_t r = detail::index(detail::field(b[e], "right", at), at + "/right");
      if (l >= n || r >= n) detail::parse_fail(at, "basis index out of range");
      if (seen[l * n + r]) detail::parse_fail(at, "bracket given twice");
      seen[l * n + r] = true;
      Vector v = detail::vector(detail::field(b[e], "value", at), n, at + "/value");
      for (std::size_t k = 0; k < n; ++k) c[(l * n + r) * n + k] = v[k];
    }
  }
  return LeibnizAlgebra(n, std::move(c), std::move(names));
}

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json to_json(const LeibnizAlgebra& g) {
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = 0; k < g.dim(); ++k) {
      Vector v = g.bracket_basis(i, k);
      if (!is_zero(v)) brackets.push_back({{"left", i}, {"right", k}, {"value", to_json(v)}});
    }
  json j{{"dim", g.dim()}, {"brackets", brackets}};
  if (!g.names().empty()) j["basis"] = g.names();
  return j;
}

inline json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline RatMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& locus) {
  if (!j.is_array() || j.size() != rows) detail::parse_fail(locus, "expected " + std::to_string(rows) + " rows");
  std::vector<Vector> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(detail::vector(j[i], cols, locus + "/" + std::to_string(i)));
  return RatMatrix::from_rows(r, cols);
}

// ---- precrossed modules

inline PrecrossedModule parse_pxm(const json& j, const std::string& locus = "") {
  auto T = parse_group(detail::field(j, "T", locus), locus + "/T");
  auto G = parse_group(detail::field(j, "G", locus), locus + "/G");
  auto bd = detail::elem_list(detail::field(j, "boundary", locus), locus + "/boundary");
  const auto& a = detail::field(j, "action", locus);
  if (!a.is_array()) detail::parse_fail(locus + "/action", "expected an array of rows");
  std::vector<std::vector<Elem>> action;
  for (std::size_t i = 0; i < a.size(); ++i)
    action.push_back(detail::elem_list(a[i], locus + "/action/" + std::to_string(i)));
  auto x = detail::located(locus, [&] { return PrecrossedModule(T, G, bd, action); });
  check_pxm_size(x);
  return x;
}

inline json to_json(const PrecrossedModule& x) {
  return {{"T", to_json(x.t_group())},
          {"G", to_json(x.g_group())},
          {"boundary", x.boundary().images()},
          {"action", x.action_table()}};
}

// ---- files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open input file", path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "invalid JSON", path + ": byte " + std::to_string(e.byte));
  }
}

}  // namespace birkhoff::io
