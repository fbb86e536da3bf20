#ifndef NINDEP_JSON_IO_HPP
#define NINDEP_JSON_IO_HPP

// JSON forms of the library's values.  Rationals are always strings ("p/q" or
// "p") so that no value passes through floating point.
//
//   NodeSet     {"nodes": [["x","y"], ...]}
//   Poly2       {"coeffs": {"i,j": "p/q", ...}}      zero coefficients omitted
//   Curve       Poly2 plus {"degree": m}
//   Line        ["a","b","c"]                         a*x + b*y + c
//   Report      {"theorem", "n", "k", "seed", "generator", "dimension",
//                "bound", "witness", "residual", "verdict", "checks"}

#include <json.hpp>

#include <charconv>
#include <cstddef>
#include <string>
#include <vector>

#include "nindep/constructions.hpp"
#include "nindep/curves.hpp"
#include "nindep/errors.hpp"
#include "nindep/exactnum.hpp"
#include "nindep/nodesets.hpp"
#include "nindep/poly2.hpp"
#include "nindep/verify.hpp"

namespace nindep::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw FormatError("expected a rational as a string, got " + j.dump());
}

inline json to_json(const Node& a) { return json::array({to_string(a.x), to_string(a.y)}); }

inline Node node_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("a node is a two-element array, got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline json nodes_to_json(std::span<const Node> nodes) {
  json arr = json::array();
  for (const auto& a : nodes) arr.push_back(to_json(a));
  return arr;
}

inline json to_json(const NodeSet& xs) { return json{{"nodes", nodes_to_json(xs.nodes())}}; }

inline std::vector<Node> node_list_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of nodes");
  std::vector<Node> out;
  for (const auto& e : j) out.push_back(node_from_json(e));
  return out;
}

// Accepts any object with a "nodes" array; other keys are ignored so that
// generator output can be fed back unchanged.
inline NodeSet nodeset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes")) throw FormatError("node set JSON needs a \"nodes\" array");
  return NodeSet(node_list_from_json(j.at("nodes")));
}

inline json to_json(const Poly2& p) {
  json coeffs = json::object();
  for (const auto& [m, c] : p.terms()) coeffs[std::to_string(m.x) + "," + std::to_string(m.y)] = to_string(c);
  return json{{"coeffs", coeffs}};
}

namespace detail {

inline int parse_exponent(std::string_view s) {
  int v = -1;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0) throw FormatError("bad exponent '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline Poly2 poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object()) {
    throw FormatError("polynomial JSON needs a \"coeffs\" object");
  }
  Poly2 p;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw FormatError("bad exponent key '" + key + "'");
    const int i = detail::parse_exponent(std::string_view(key).substr(0, comma));
    const int e = detail::parse_exponent(std::string_view(key).substr(comma + 1));
    const Rational c = rational_from_json(value);
    if (c == 0) throw FormatError("zero coefficient stored for '" + key + "'");
    if (p.coefficient(i, e) != 0) throw FormatError("repeated exponent key '" + key + "'");
    p += Poly2::monomial(c, i, e);
  }
  return p;
}

inline json to_json(const Curve& c) {
  json j = to_json(c.poly());
  j["degree"] = c.degree();
  return j;
}

inline Curve curve_from_json(const json& j) {
  Poly2 p = poly_from_json(j);
  if (p.degree() < 1) throw FormatError("a curve needs degree >= 1");
  if (j.contains("degree") && j.at("degree") != p.degree()) throw FormatError("curve degree echo does not match");
  return Curve(std::move(p));
}

inline json to_json(const Line& l) { return json::array({to_string(l.a()), to_string(l.b()), to_string(l.c())}); }

inline Line line_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("a line is [\"a\",\"b\",\"c\"], got " + j.dump());
  const Rational a = rational_from_json(j[0]), b = rational_from_json(j[1]), c = rational_from_json(j[2]);
  if (a == 0 && b == 0) throw FormatError("a line needs (a, b) != (0, 0)");
  return Line(a, b, c);
}

inline json index_list(std::span<const std::size_t> idx) {
  json arr = json::array();
  for (auto i : idx) arr.push_back(i);
  return arr;
}

inline json to_json(const Configuration& cfg) {
  json j;
  j["schema"] = "1";
  j["config"] = cfg.kind;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["seed"] = cfg.seed;
  j["nodes"] = nodes_to_json(cfg.nodes.nodes());
  json des = json::object();
  if (cfg.ell) des["ell"] = to_json(Curve(*cfg.ell));
  if (cfg.mu) des["mu"] = to_json(*cfg.mu);
  if (!cfg.components.empty()) {
    json lines = json::array();
    for (const auto& l : cfg.components) lines.push_back(to_json(l));
    des["components"] = lines;
  }
  if (!cfg.subset.empty()) des["S"] = index_list(cfg.subset);
  if (!cfg.residual.empty()) des["residual"] = index_list(cfg.residual);
  j["designations"] = des;
  return j;
}

inline json to_json(const ConfigReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["generator"] = r.generator;
  j["dimension"] = r.dimension;
  j["bound"] = r.bound;
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  j["residual"] = r.witness ? nodes_to_json(r.residual) : json(nullptr);
  j["verdict"] = r.pass() ? "pass" : "fail";
  json checks = json::object();
  for (const auto& c : r.checks) checks[c.name] = c.passed;
  j["checks"] = checks;
  return j;
}

// {"lines": [["a","b","c"], ...], "nodes": [["x","y"], ...]}; each node must
// lie on exactly one line.
inline PairDivisionInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lines") || !j.contains("nodes")) {
    throw FormatError("pair-division instance needs \"lines\" and \"nodes\"");
  }
  std::vector<Line> lines;
  for (const auto& l : j.at("lines")) lines.push_back(line_from_json(l));
  std::vector<Node> nodes = node_list_from_json(j.at("nodes"));
  NodeSet distinct(nodes);  // rejects duplicates
  if (nodes.size() % 2 != 0) throw FormatError("pair-division instance needs an even number of nodes");
  return PairDivisionInstance::make(std::move(lines), std::move(nodes));
}

}  // namespace nindep::io

#endif  // NINDEP_JSON_IO_HPP
