#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "genhecke/certify.hpp"
#include "genhecke/io.hpp"
#include "genhecke/satake.hpp"
#include "genhecke/vinberg.hpp"

using namespace genhecke;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCertify = 3;

std::pair<int, int> parse_pair(const std::string& s, const char* what) {
  auto comma = s.find(',');
  if (comma == std::string::npos) fail(ErrorKind::ParseError, std::string(what) + " must look like a,b");
  try {
    std::size_t p1 = 0, p2 = 0;
    int a = std::stoi(s.substr(0, comma), &p1), b = std::stoi(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, std::string(what) + " must look like a,b");
  }
}

// Inline JSON, @file, or a whitespace-separated product of factors.
std::string read_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) fail(ErrorKind::ValidationError, "cannot read " + s.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

using PZ = ProPElem<Integer>;
using H1 = H1Elem<Integer>;
using H2 = H2Elem<Integer>;
using Elem = io::HeckeElem<Integer>;

std::vector<std::string> factors(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  if (out.empty()) fail(ErrorKind::ParseError, "empty element expression");
  return out;
}

// Factors: generator names, or a parenthesized theta expression embedded in the model.
Elem parse_element(const std::string& raw, const std::string& algebra, int q0) {
  std::string text = read_arg(raw);
  if (!text.empty() && text.find_first_not_of(" \t\n") != std::string::npos &&
      text[text.find_first_not_of(" \t\n")] == '{')
    return io::hecke_from_json(parse_json(text));
  auto theta_of = [](const std::string& f) -> std::optional<ThetaElem<Integer>> {
    if (f.size() >= 2 && f.front() == '(' && f.back() == ')') return parse_theta(f.substr(1, f.size() - 2));
    return std::nullopt;
  };
  if (algebra == "ProP") {
    PZ acc = PZ::one(q0);
    for (const auto& f : factors(text)) {
      if (f == "1") continue;
      if (f == "T_s") acc = acc * PZ::T_s(q0);
      else if (f == "T_s0") acc = acc * PZ::T_s0(q0);
      else if (f == "T_u") acc = acc * PZ::T_u(q0);
      else if (f == "T_uinv") acc = acc * PZ::T_uinv(q0);
      else if (f == "c_s") acc = acc * PZ::c_s(q0);
      else fail(ErrorKind::ParseError, "unknown ProP factor '" + f + "' (use T_s, T_s0, T_u, T_uinv, c_s or JSON)");
    }
    return acc;
  }
  if (algebra == "H1") {
    H1 acc = H1::one();
    for (const auto& f : factors(text)) {
      if (auto t = theta_of(f)) acc = acc * h1_from_theta(*t);
      else if (f == "1") continue;
      else if (f == "S") acc = acc * H1::S();
      else if (f == "U") acc = acc * H1::U();
      else if (f == "Uinv") acc = acc * H1::Uinv();
      else fail(ErrorKind::ParseError, "unknown H1 factor '" + f + "' (use S, U, Uinv, (theta) or JSON)");
    }
    return acc;
  }
  if (algebra == "H2") {
    H2 acc = H2::one();
    for (const auto& f : factors(text)) {
      if (auto t = theta_of(f)) acc = acc * h2_from_theta(*t);
      else if (f == "1") continue;
      else if (f == "S") acc = acc * H2::S();
      else if (f == "U") acc = acc * H2::U();
      else if (f == "Uinv") acc = acc * H2::Uinv();
      else if (f == "eps1") acc = acc * H2::eps1();
      else if (f == "eps2") acc = acc * H2::eps2();
      else fail(ErrorKind::ParseError, "unknown H2 factor '" + f + "' (use S, U, Uinv, eps1, eps2, (theta) or JSON)");
    }
    return acc;
  }
  fail(ErrorKind::ValidationError, "algebra must be ProP, H1 or H2");
}

json matrix_json(const OpMatrix2<Integer>& m) {
  return json{{"basis", basis_label(m.basis)},
              {"matrix", json::array({json::array({m.m[0][0].str(), m.m[0][1].str()}),
                                      json::array({m.m[1][0].str(), m.m[1][1].str()})})},
              {"det", m.det().str()},
              {"trace", m.trace().str()}};
}

json constants_json(const std::map<Coweight, GenPoly<Integer>>& c) {
  json j = json::object();
  for (auto& [nu, p] : c) j[coweight_str(nu)] = p.str();
  return j;
}

// ---- table output ----

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_rows(std::ostream& os, const json& rows) {
  std::vector<std::string> cols;
  for (auto& [k, v] : rows[0].items()) cols.push_back(k);
  std::vector<std::size_t> w(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    w[i] = cols[i].size();
    for (const auto& r : rows) w[i] = std::max(w[i], cell(r.value(cols[i], json())).size());
  }
  for (std::size_t i = 0; i < cols.size(); ++i) os << std::left << std::setw(static_cast<int>(w[i]) + 2) << cols[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << std::left << std::setw(static_cast<int>(w[i]) + 2) << cell(r.value(cols[i], json()));
    os << "\n";
  }
}

void print_table(std::ostream& os, const json& j) {
  if (!j.is_object()) {
    os << cell(j) << "\n";
    return;
  }
  for (auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      os << k << ":\n";
      print_rows(os, v);
    } else {
      os << k << ": " << cell(v) << "\n";
    }
  }
}

struct Output {
  std::string format = "json";
  void emit(const json& j) const {
    if (format == "table") print_table(std::cout, j);
    else std::cout << j.dump() << "\n";
  }
};

// ---- verbs ----

json cmd_weyl_length(const std::string& lambda, const std::string& t, const std::string& w, int q0) {
  auto [l1, l2] = parse_pair(lambda, "--lambda");
  auto [e1, e2] = parse_pair(t, "--t");
  if (w != "1" && w != "s") fail(ErrorKind::ValidationError, "--w must be 1 or s");
  ExtendedWeylElem x = ExtendedWeylElem::torus(q0, e1, e2);
  x.l1 = l1;
  x.l2 = l2;
  x.s = w == "s";
  auto r = reduced_word(x);
  json word = json::array();
  for (AffGen g : r.word) word.push_back(g == AffGen::S ? "s" : "s0");
  return json{{"element", io::to_json(x)}, {"length", weyl_length(x)}, {"reduced_word", word},
              {"u_power", r.u_power}, {"torus", {r.t.e1, r.t.e2}}};
}

json orbit_json(const CharacterOrbit& o) {
  json members = json::array();
  for (const auto& c : o.members) members.push_back(io::to_json(c));
  json j{{"members", members}, {"regular", o.regular()}, {"component", o.regular() ? "H2" : "H1"}};
  if (o.regular()) {
    auto [a, b] = default_order(o);
    j["order"] = {io::to_json(a), io::to_json(b)};
    j["order_source"] = "default (lexicographic on character exponents)";
  }
  return j;
}

json cmd_idempotents(int q0, const std::string& character) {
  json j{{"q0", q0}};
  bool integral = q0 == 2;
  j["coefficients"] = integral ? "Z" : "Z[zeta_" + std::to_string(q0 - 1) + "][1/" + std::to_string(q0 - 1) + "]";
  auto idem = [&](const auto& x) { return integral ? io::to_json(idempotent<Integer>(x)) : io::to_json(idempotent<CycloLoc>(x)); };
  if (!character.empty()) {
    auto [a1, a2] = parse_pair(character, "--character");
    auto chi = TorusCharacter::make(q0, a1, a2);
    j["character"] = io::to_json(chi);
    j["idempotent"] = idem(chi);
    return j;
  }
  json orbits = json::array();
  for (const auto& o : enumerate_orbits(q0)) {
    json oj = orbit_json(o);
    oj["idempotent"] = idem(o);
    orbits.push_back(oj);
  }
  j["orbits"] = orbits;
  return j;
}

json cmd_hecke_expand(const std::string& lambda, const std::string& t, int q0, const std::string& algebra) {
  auto [a, b] = parse_pair(lambda, "--lambda");
  json j{{"lambda", {a, b}}};
  if (algebra == "ProP") {
    auto [e1, e2] = parse_pair(t, "--t");
    j["element"] = io::to_json(e_element<Integer>(q0, a, b, TorusElem::make(q0 - 1, e1, e2)));
  } else if (algebra == "H1") {
    j["element"] = io::to_json(model_e_element<H1>(a, b));
  } else if (algebra == "H2") {
    j["element"] = io::to_json(model_e_element<H2>(a, b));
  } else {
    fail(ErrorKind::ValidationError, "algebra must be ProP, H1 or H2");
  }
  return j;
}

json cmd_antispherical(const std::string& op, const std::string& element, const std::string& algebra, int q0) {
  if (!op.empty()) {
    if (op == "vigneras") return matrix_json(vigneras_operator());
    if (op == "Ds") return matrix_json(demazure_operator(DemazureKind::Ds));
    if (op == "Ds'") return matrix_json(demazure_operator(DemazureKind::DsPrime));
    if (op == "Dsq") return matrix_json(demazure_operator(DemazureKind::DsQ));
    fail(ErrorKind::ValidationError, "--operator must be vigneras, Ds, Ds' or Dsq");
  }
  if (element.empty()) fail(ErrorKind::ValidationError, "give --operator or --element");
  Elem e = parse_element(element, algebra, q0);
  if (auto* h1 = std::get_if<H1>(&e)) return matrix_json(rep1(*h1));
  if (auto* h2 = std::get_if<H2>(&e)) return matrix_json(rep2(*h2));
  fail(ErrorKind::VariantMismatch, "antispherical matrices are defined for H1 and H2 elements");
}

const GaloisField& field_of(int q0, int m) { return GaloisField::get(q0, m); }

json cmd_module_at(const std::string& gamma, int q0, int m, const std::string& z1, const std::string& z2,
                   const std::string& x, const std::string& y) {
  const GaloisField& f = field_of(q0, m);
  if (z2.empty()) fail(ErrorKind::ValidationError, "--z2 is required");
  ModulePoint p = io::component_from_string(gamma) == Component::NonRegular
                      ? ModulePoint::nonregular(f, f.parse(z1.empty() ? "0" : z1), f.parse(z2))
                      : ModulePoint::regular(f, f.parse(x.empty() ? "0" : x), f.parse(y.empty() ? "0" : y), f.parse(z2));
  ModuleData md = module_at_point(p);
  ClassRecord r = classify(md);
  json j = io::to_json(md, r);
  j["point"] = io::to_json(p);
  json sup = json::array();
  for (const auto& s : bernstein_support(md)) sup.push_back({{"x", s[0].str()}, {"y", s[1].str()}, {"z2", s[2].str()}});
  j["bernstein_support"] = sup;
  if (p.on_parabola()) {
    json k = json::array();
    for (const auto& v : kernel_at_parabola(f, p.z1, p.z2)) k.push_back(v.str());
    j["kernel_1_S_U_SU"] = k;
  }
  return j;
}

json cmd_atlas(int q0, int m, const std::string& gamma, int threads) {
  const GaloisField& f = field_of(q0, m);
  std::vector<Component> comps;
  if (gamma == "all") comps = {Component::NonRegular, Component::Regular};
  else comps = {io::component_from_string(gamma)};
  json j{{"field", io::field_json(f)}};
  json rows = json::array(), counts = json::object();
  for (Component c : comps) {
    AtlasResult res = classify_atlas(q0, m, c, threads);
    counts[component_name(c)] = {{"points", res.rows.size()}, {"supersingular", res.supersingular},
                                 {"parabola", res.parabola}, {"simple", res.simple}};
    for (const auto& row : res.rows) {
      const auto& p = row.point;
      json rj{{"gamma", component_name(c)}};
      rj["z1/x"] = c == Component::NonRegular ? p.z1.str() : p.x.str();
      rj["y"] = c == Component::NonRegular ? std::string("-") : p.y.str();
      rj["z2"] = p.z2.str();
      rj["class"] = row.record.cls;
      rj["simple"] = row.record.simple;
      rj["supersingular"] = row.record.supersingular;
      rj["on_parabola"] = p.on_parabola();
      rows.push_back(rj);
    }
  }
  j["counts"] = counts;
  j["rows"] = rows;
  return j;
}

json cmd_satake_image(const std::string& lambda) {
  auto [a, b] = parse_pair(lambda, "--lambda");
  if (a < b) fail(ErrorKind::ValidationError, "--lambda must be dominant (a >= b)");
  SphericalElem h = dominant_basis_elem({a, b});
  auto img = satake_iso(h);
  return json{{"lambda", coweight_str({a, b})},
              {"generators", h.str(spherical_names())},
              {"image", img.str()},
              {"steinberg", to_steinberg(img).str(steinberg_names())}};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      fail(ErrorKind::ParseError, "bad integer list '" + s + "'");
    }
  }
  return out;
}

// Returns {payload, certified}.
std::pair<json, bool> cmd_satake_constants(const std::string& lambda, const std::string& mu, const std::string& check) {
  auto [a, b] = parse_pair(lambda, "--lambda");
  auto [c, d] = parse_pair(mu, "--mu");
  if (a < b || c < d) fail(ErrorKind::ValidationError, "--lambda and --mu must be dominant");
  auto sc = structure_constants({a, b}, {c, d});
  if (check.empty()) return {constants_json(sc), true};
  json report = json::object();
  bool ok = true;
  int total = a + b + c + d;
  for (int p : parse_int_list(check)) {
    json col = json::object();
    for (int n1 = (total + 1) / 2; n1 <= total; ++n1) {
      Coweight nu{n1, total - n1};
      auto it = sc.find(nu);
      Integer ours = it == sc.end() ? Integer(0) : it->second.eval(Integer(p), Integer(1), [](const Integer& v) { return v; });
      long oracle = hall_oracle({a, b}, {c, d}, nu, p);
      col[coweight_str(nu)] = {{"constant", scalar_str(ours)}, {"oracle", oracle}};
      ok = ok && ours == oracle;
    }
    report[std::to_string(p)] = col;
  }
  return {json{{"constants", constants_json(sc)}, {"check", report}, {"ok", ok}}, ok};
}

std::pair<json, bool> cmd_herzig(int q0, int degree) {
  HerzigReport r = herzig_compare(q0, degree);
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"label", row.label}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"ok", row.ok}});
  return {json{{"q0", q0}, {"ok", r.ok()}, {"rows", rows}}, r.ok()};
}

json cmd_bernstein(const std::string& element, const std::string& algebra, int q0) {
  Elem e = parse_element(element, algebra, q0);
  if (auto* p = std::get_if<PZ>(&e)) {
    json comps = json::array();
    for (auto& [t, f] : bernstein_iso(*p)) comps.push_back({{"t", {t.e1, t.e2}}, {"image", f.str()}});
    return json{{"algebra", "ProP"}, {"components", comps}};
  }
  if (auto* h1 = std::get_if<H1>(&e)) return json{{"algebra", "H1"}, {"image", bernstein_iso(*h1).str()}};
  auto [a, b] = bernstein_iso(std::get<H2>(e));
  return json{{"algebra", "H2"}, {"image", json::array({a.str(), b.str()})}};
}

json cmd_vinberg_decompose(const std::string& matrices) {
  json j = parse_json(read_arg(matrices));
  const GaloisField& f = io::field_from_json(io::field(j, "field"));
  auto d = idempotent_block_decompose(io::matrix_from_json(f, io::field(j, "EX")),
                                      io::matrix_from_json(f, io::field(j, "EY")),
                                      io::matrix_from_json(f, io::field(j, "E0")));
  json weights = json::array();
  for (auto& [p, dim] : d.weights) weights.push_back({{"pattern", p.label()}, {"dim", dim}});
  return json{{"d100", d.d100}, {"d010", d.d010}, {"d111", d.d111}, {"d000", d.d000}, {"weights", weights}};
}

json cmd_vinberg_invariants(const std::string& ring, int degree) {
  MonoidName n = parse_monoid(ring);
  json rows = json::array();
  for (const auto& e : invariants_basis(n, degree)) {
    ThetaElem<Integer> v = is_zero_fiber(n) ? e.value.subst_q(Integer(0)) : e.value;
    rows.push_back({{"label", e.label}, {"value", v.str()}, {"w0_fixed", v.swapped() == v}});
  }
  return json{{"ring", monoid_str(n)}, {"degree", degree}, {"basis", rows}};
}

std::pair<json, bool> cmd_certify() {
  auto checks = run_certification();
  json rows = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << c.millis;
    rows.push_back({{"check", c.name}, {"pass", c.ok}, {"detail", c.detail}, {"ms", ms.str()}});
    ok = ok && c.ok;
  }
  return {json{{"ok", ok}, {"checks", rows}}, ok};
}

// `satake image` -> `satake-image`, `vinberg decompose` -> `vinberg-decompose`.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() >= 2 && (args[0] == "satake" || args[0] == "vinberg") && args[1].rfind("-", 0) != 0) {
    args[0] += "-" + args[1];
    args.erase(args.begin() + 1);
  }
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genhecke: pro-p Iwahori-Hecke algebras of GL2 and their Satake and antispherical maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string lambda, mu, t = "0,0", w = "1", algebra = "ProP", a_text, b_text, element, op, gamma = "nonregular";
  std::string z1, z2, x, y, character, check, matrices, ring = "VT";
  int q0 = 3, m = 1, threads = parallelism_from_env(), degree = 3;

  auto* weyl = app.add_subcommand("weyl-length", "Length and reduced word of t e^lambda w");
  weyl->add_option("--lambda", lambda, "Translation part n1,n2")->required();
  weyl->add_option("--t", t, "Torus part e1,e2");
  weyl->add_option("--w", w, "Finite part: 1 or s");
  weyl->add_option("--q0", q0, "Residue field size");

  auto* mul = app.add_subcommand("hecke-mul", "Product of two Hecke algebra elements");
  mul->add_option("--algebra", algebra, "ProP, H1 or H2 (for generator expressions)");
  mul->add_option("--q0", q0, "Residue field size (ProP)");
  mul->add_option("--a", a_text, "Left factor: JSON, @file, or generators like 'T_s T_u'")->required();
  mul->add_option("--b", b_text, "Right factor")->required();

  auto* expand = app.add_subcommand("hecke-expand", "E(lambda) in the T-basis or the model basis");
  expand->add_option("--lambda", lambda, "n1,n2")->required();
  expand->add_option("--t", t, "Torus part e1,e2 (ProP)");
  expand->add_option("--q0", q0, "Residue field size");
  expand->add_option("--algebra", algebra, "ProP, H1 or H2");

  auto* idem = app.add_subcommand("idempotents", "Orbit idempotents of the pro-p algebra");
  idem->add_option("--q0", q0, "Residue field size")->required();
  idem->add_option("--character", character, "Single character a1,a2");

  auto* anti = app.add_subcommand("antispherical-matrix", "Operator matrices of the antispherical representation");
  anti->add_option("--operator", op, "vigneras, Ds, Ds' or Dsq");
  anti->add_option("--element", element, "H1/H2 element: JSON, @file or generators");
  anti->add_option("--algebra", algebra, "H1 or H2");

  auto* mod = app.add_subcommand("module-at", "Antispherical module at a point over F_{q0^m}");
  mod->add_option("--gamma", gamma, "nonregular or regular");
  mod->add_option("--q0", q0, "Characteristic power")->required();
  mod->add_option("--m", m, "Extension degree");
  mod->add_option("--z1", z1, "z1 (nonregular)");
  mod->add_option("--z2", z2, "z2")->required();
  mod->add_option("--x", x, "x (regular)");
  mod->add_option("--y", y, "y (regular)");

  auto* atlas = app.add_subcommand("classify-atlas", "Classify every point of a component over F_{q0^m}");
  atlas->add_option("--q0", q0, "Characteristic power")->required();
  atlas->add_option("--m", m, "Extension degree");
  atlas->add_option("--gamma", gamma, "nonregular, regular or all");
  atlas->add_option("--threads", threads, "Worker threads (default from GENHECKE_THREADS)");

  auto* simg = app.add_subcommand("satake-image", "Satake image of T_lambda");
  simg->add_option("--lambda", lambda, "Dominant a,b")->required();

  auto* scon = app.add_subcommand("satake-constants", "Structure constants N_{lambda,mu;nu}(q)");
  scon->add_option("--lambda", lambda, "Dominant a,b")->required();
  scon->add_option("--mu", mu, "Dominant c,d")->required();
  scon->add_option("--check-q0", check, "Primes to check against the lattice count, e.g. 2,3,5");

  auto* sherz = app.add_subcommand("satake-herzig", "Compare with the unnormalized mod-p Satake transform");
  sherz->add_option("--q0", q0, "Residue field size")->required();
  sherz->add_option("--degree", degree, "Largest dominant coweight entry to compare");

  auto* bern = app.add_subcommand("bernstein-map", "Bernstein image of an element");
  bern->add_option("--element", element, "JSON, @file or generators")->required();
  bern->add_option("--algebra", algebra, "ProP, H1 or H2");
  bern->add_option("--q0", q0, "Residue field size (ProP)");

  auto* vdec = app.add_subcommand("vinberg-decompose", "Block decomposition for commuting idempotents");
  vdec->add_option("--matrices", matrices, "JSON {field, EX, EY, E0} inline or @file")->required();

  auto* vinv = app.add_subcommand("vinberg-invariants", "W0-invariant basis of a representation ring");
  vinv->add_option("--ring", ring, "VT, VB, VT0, VB0, T, VGL2, VGL20");
  vinv->add_option("--degree", degree, "Total degree bound");

  auto* cert = app.add_subcommand("certify", "Run the identity suite");

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n";
    std::cout << json{{"error", {{"kind", "ValidationError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kExitValidation;
  }

  try {
    int rc = 0;
    auto emit_checked = [&](const std::pair<json, bool>& r) {
      out.emit(r.first);
      if (!r.second) rc = kExitCertify;
    };
    if (*weyl) out.emit(cmd_weyl_length(lambda, t, w, q0));
    else if (*mul) {
      Elem a = parse_element(a_text, algebra, q0), b = parse_element(b_text, algebra, q0);
      if (a.index() != b.index()) fail(ErrorKind::TagMismatch, "factors belong to different algebras");
      Elem prod = std::visit(
          [&](const auto& l) -> Elem { return l * std::get<std::decay_t<decltype(l)>>(b); }, a);
      out.emit(json{{"product", io::to_json(prod)}});
    } else if (*expand) out.emit(cmd_hecke_expand(lambda, t, q0, algebra));
    else if (*idem) out.emit(cmd_idempotents(q0, character));
    else if (*anti) out.emit(cmd_antispherical(op, element, algebra == "ProP" ? "H1" : algebra, q0));
    else if (*mod) out.emit(cmd_module_at(gamma, q0, m, z1, z2, x, y));
    else if (*atlas) out.emit(cmd_atlas(q0, m, gamma, threads));
    else if (*simg) out.emit(cmd_satake_image(lambda));
    else if (*scon) emit_checked(cmd_satake_constants(lambda, mu, check));
    else if (*sherz) emit_checked(cmd_herzig(q0, degree));
    else if (*bern) out.emit(cmd_bernstein(element, algebra, q0));
    else if (*vdec) out.emit(cmd_vinberg_decompose(matrices));
    else if (*vinv) out.emit(cmd_vinberg_invariants(ring, degree));
    else if (*cert) emit_checked(cmd_certify());
    return rc;
  } catch (const Error& e) {
    std::cout << io::error_json(e).dump(2) << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"kind", "ValidationError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kExitValidation;
  }
}
