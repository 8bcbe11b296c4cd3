#pragma once

#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "genhecke/hecke.hpp"
#include "genhecke/models.hpp"
#include "genhecke/modules.hpp"

namespace genhecke::io {

using nlohmann::json;

// Scalar and polynomial text for a coefficient ring; n is the cyclotomic level (ignored for Integer).
template <class R>
struct ScalarText;

template <>
struct ScalarText<Integer> {
  static Integer parse(const std::string& s, int) { return parse_integer(s); }
  static ThetaElem<Integer> theta(const std::string& s, int) { return parse_theta(s); }
};

template <>
struct ScalarText<CycloLoc> {
  static CycloLoc parse(const std::string& s, int n) { return CycloLoc::parse(s, n); }
  static ThetaElem<CycloLoc> theta(const std::string& s, int n) { return parse_theta_cyclo(s, n); }
};

// A polynomial in q only, written in the theta grammar.
template <class R>
GenPoly<R> parse_qpoly(const std::string& s, int n = 0) {
  ThetaElem<R> t = ScalarText<R>::theta(s, n);
  GenPoly<R> out;
  for (auto& [mo, c] : t.terms()) {
    if (mo.m != 0 || mo.z != 0) fail(ErrorKind::ParseError, "expected a polynomial in q, got '" + s + "'");
    out.add_term(mo.qe, c);
  }
  return out;
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::ParseError, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

inline std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(ErrorKind::ParseError, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

inline std::pair<long, long> int_pair(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    fail(ErrorKind::ParseError, std::string("'") + key + "' must be a pair of integers");
  return {v[0].get<long>(), v[1].get<long>()};
}

// ---- Weyl group ----

inline json to_json(const ExtendedWeylElem& w) {
  return json{{"t", {w.t.e1, w.t.e2}}, {"lambda", {w.l1, w.l2}}, {"w", w.s ? "s" : "1"}};
}

inline ExtendedWeylElem weyl_from_json(int q0, const json& j) {
  auto [e1, e2] = int_pair(j, "t");
  auto [l1, l2] = int_pair(j, "lambda");
  std::string w = string_field(j, "w");
  if (w != "1" && w != "s") fail(ErrorKind::ParseError, "'w' must be \"1\" or \"s\"");
  ExtendedWeylElem x = ExtendedWeylElem::torus(q0, e1, e2);
  x.l1 = static_cast<int>(l1);
  x.l2 = static_cast<int>(l2);
  x.s = w == "s";
  return x;
}

inline json to_json(const TorusCharacter& c) { return json{{"a", {c.a1, c.a2}}}; }

inline TorusCharacter character_from_json(int q0, const json& j) {
  auto [a1, a2] = int_pair(j, "a");
  return TorusCharacter::make(q0, a1, a2);
}

// ---- Hecke elements ----

template <class R>
std::string coeff_tag(const std::optional<R>& qv) {
  return qv ? "q=" + scalar_str(*qv) : std::string("generic");
}

template <class R>
std::optional<R> parse_coeff_tag(const std::string& tag, int n) {
  if (tag == "generic") return std::nullopt;
  if (tag.rfind("q=", 0) == 0) return ScalarText<R>::parse(tag.substr(2), n);
  fail(ErrorKind::ParseError, "'coeff' must be \"generic\" or \"q=<value>\"");
}

inline const std::array<const char*, 4>& h1_basis_names() {
  static const std::array<const char*, 4> n{"1", "S", "U", "SU"};
  return n;
}

inline const std::array<const char*, 4>& h2_basis_names() {
  static const std::array<const char*, 4> n{"E11", "E22", "E12", "E21"};
  return n;
}

template <class R>
json to_json(const ProPElem<R>& h) {
  json terms = json::array();
  for (auto& [w, c] : h.terms()) terms.push_back({{"basis", to_json(w)}, {"coeff", c.str()}});
  return json{{"algebra", "ProP"}, {"q0", h.q0()}, {"coeff", "generic"}, {"terms", terms}};
}

template <class R>
json to_json(const H1Elem<R>& h) {
  json terms = json::array();
  for (int i = 0; i < 4; ++i)
    if (!h.coeffs()[i].is_zero()) terms.push_back({{"basis", h1_basis_names()[i]}, {"coeff", h.coeffs()[i].str()}});
  return json{{"algebra", "H1"}, {"coeff", coeff_tag(h.q_value())}, {"terms", terms}};
}

template <class R>
json to_json(const H2Elem<R>& h) {
  json terms = json::array();
  for (int i = 0; i < 4; ++i)
    if (!h.coeffs()[i].is_zero()) terms.push_back({{"basis", h2_basis_names()[i]}, {"coeff", h.coeffs()[i].str()}});
  return json{{"algebra", "H2"}, {"coeff", coeff_tag(h.q_value())}, {"terms", terms}};
}

template <class R>
using HeckeElem = std::variant<ProPElem<R>, H1Elem<R>, H2Elem<R>>;

template <class R>
json to_json(const HeckeElem<R>& h) {
  return std::visit([](const auto& x) { return to_json(x); }, h);
}

namespace detail {

template <class R>
std::array<ThetaElem<R>, 4> model_coeffs(const json& terms, const std::array<const char*, 4>& names, int n) {
  std::array<ThetaElem<R>, 4> c{};
  for (const auto& t : terms) {
    std::string b = string_field(t, "basis");
    int idx = -1;
    for (int i = 0; i < 4; ++i)
      if (b == names[i]) idx = i;
    if (idx < 0) fail(ErrorKind::ParseError, "unknown basis element '" + b + "'");
    c[idx] += ScalarText<R>::theta(string_field(t, "coeff"), n);
  }
  return c;
}

}  // namespace detail

// n is the cyclotomic level for CycloLoc coefficients.
template <class R = Integer>
HeckeElem<R> hecke_from_json(const json& j, int n = 0) {
  std::string alg = string_field(j, "algebra");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail(ErrorKind::ParseError, "'terms' must be an array");
  std::string tag = j.contains("coeff") ? string_field(j, "coeff") : std::string("generic");
  if (alg == "ProP") {
    if (tag != "generic") fail(ErrorKind::ValidationError, "pro-p elements carry generic coefficients");
    int q0 = int_field(j, "q0");
    ProPElem<R> h(q0);
    for (const auto& t : terms) h.add_term(weyl_from_json(q0, field(t, "basis")), parse_qpoly<R>(string_field(t, "coeff"), n));
    return h;
  }
  auto qv = parse_coeff_tag<R>(tag, n);
  if (alg == "H1") return H1Elem<R>::from_coeffs(detail::model_coeffs<R>(terms, h1_basis_names(), n), qv);
  if (alg == "H2") return H2Elem<R>::from_coeffs(detail::model_coeffs<R>(terms, h2_basis_names(), n), qv);
  fail(ErrorKind::ParseError, "unknown algebra '" + alg + "'");
}

// ---- Modules over finite fields ----

inline json to_json(const FMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline FMatrix matrix_from_json(const GaloisField& f, const json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j[0].size()) fail(ErrorKind::ParseError, "matrix rows must have equal length");
    rows.emplace_back();
    for (const auto& e : r) {
      if (e.is_number_integer()) rows.back().push_back(f.from_integer(e.get<long>()));
      else if (e.is_string()) rows.back().push_back(f.parse(e.get<std::string>()));
      else fail(ErrorKind::ParseError, "matrix entries must be integers or field-element strings");
    }
  }
  return FMatrix::from_rows(f, rows);
}

inline json field_json(const GaloisField& f) { return json{{"q0", f.p()}, {"m", f.degree()}, {"size", f.size()}}; }

inline const GaloisField& field_from_json(const json& j) {
  return GaloisField::get(int_field(j, "q0"), j.contains("m") ? int_field(j, "m") : 1);
}

inline json to_json(const ModulePoint& p) {
  json j{{"gamma", component_name(p.comp)}};
  if (p.comp == Component::NonRegular) {
    j["z1"] = p.z1.str();
  } else {
    j["x"] = p.x.str();
    j["y"] = p.y.str();
  }
  j["z2"] = p.z2.str();
  return j;
}

inline Component component_from_string(const std::string& s) {
  if (s == "nonregular") return Component::NonRegular;
  if (s == "regular") return Component::Regular;
  fail(ErrorKind::ValidationError, "gamma must be 'nonregular' or 'regular'");
}

inline ModulePoint point_from_json(const GaloisField& f, const json& j) {
  Component c = component_from_string(string_field(j, "gamma"));
  FieldElem z2 = f.parse(string_field(j, "z2"));
  if (c == Component::NonRegular) return ModulePoint::nonregular(f, f.parse(string_field(j, "z1")), z2);
  return ModulePoint::regular(f, f.parse(string_field(j, "x")), f.parse(string_field(j, "y")), z2);
}

inline json to_json(const H1Character& c) { return json{{"S", c.S.str()}, {"U", c.U.str()}}; }

inline json to_json(const ModuleData& m, const std::optional<ClassRecord>& r = std::nullopt) {
  json j{{"gamma", component_name(m.comp)}, {"field", field_json(m.field())}, {"dim", m.dim()},
         {"S", to_json(m.S)}, {"U", to_json(m.U)}};
  if (m.eps1) j["eps1"] = to_json(*m.eps1);
  if (r) {
    json cc{{"z2", r->central.z2.str()}};
    if (r->comp == Component::NonRegular) {
      cc["z1"] = r->central.z1.str();
    } else {
      cc["x"] = r->central.x.str();
      cc["y"] = r->central.y.str();
    }
    j["central_character"] = cc;
    j["simple"] = r->simple;
    j["supersingular"] = r->supersingular;
    j["class"] = r->cls;
    j["antispherical"] = r->antispherical;
    if (!r->constituents.empty()) {
      json cs = json::array();
      for (const auto& c : r->constituents) cs.push_back(to_json(c));
      j["constituents"] = cs;
    }
  }
  return j;
}

inline ModuleData module_from_json(const json& j) {
  const GaloisField& f = field_from_json(field(j, "field"));
  ModuleData m;
  m.comp = j.contains("gamma") ? component_from_string(string_field(j, "gamma")) : Component::NonRegular;
  m.S = matrix_from_json(f, field(j, "S"));
  m.U = matrix_from_json(f, field(j, "U"));
  if (j.contains("eps1")) m.eps1 = matrix_from_json(f, j.at("eps1"));
  if (m.comp == Component::Regular && !m.eps1) fail(ErrorKind::ParseError, "regular modules need 'eps1'");
  return m;
}

inline json error_json(const Error& e) {
  return json{{"error", {{"kind", error_name(e.kind())}, {"message", e.what()}}}};
}

}  // namespace genhecke::io
