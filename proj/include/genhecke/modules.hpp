#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "genhecke/antispherical.hpp"
#include "genhecke/fmatrix.hpp"

namespace genhecke {

enum class Component { NonRegular, Regular };

inline const char* component_name(Component c) { return c == Component::NonRegular ? "nonregular" : "regular"; }

// Point at q = 0: Steinberg coordinates (z1, z2) for non-regular orbits,
// standard coordinates (x, y, z2) with xy = 0 for regular ones.
struct ModulePoint {
  Component comp = Component::NonRegular;
  const GaloisField* field = nullptr;
  FieldElem z1, x, y, z2;

  static ModulePoint nonregular(const GaloisField& f, FieldElem z1, FieldElem z2) {
    ModulePoint p;
    p.comp = Component::NonRegular;
    p.field = &f;
    p.z1 = z1;
    p.x = z1;
    p.y = f.zero();
    p.z2 = z2;
    return p;
  }
  static ModulePoint regular(const GaloisField& f, FieldElem x, FieldElem y, FieldElem z2) {
    ModulePoint p;
    p.comp = Component::Regular;
    p.field = &f;
    p.x = x;
    p.y = y;
    p.z1 = x + y;
    p.z2 = z2;
    return p;
  }
  auto key() const {
    return std::make_tuple(comp, z1.index(), x.index(), y.index(), z2.index());
  }
  bool operator==(const ModulePoint& o) const { return field == o.field && key() == o.key(); }
  bool operator!=(const ModulePoint& o) const { return !(*this == o); }
  bool operator<(const ModulePoint& o) const { return key() < o.key(); }
  bool on_parabola() const { return comp == Component::NonRegular && z2 == z1 * z1; }
  bool supersingular() const {
    return comp == Component::NonRegular ? z1.is_zero() : (x.is_zero() && y.is_zero());
  }
  std::string str() const {
    if (comp == Component::NonRegular) return "(z1=" + z1.str() + ",z2=" + z2.str() + ")";
    return "(x=" + x.str() + ",y=" + y.str() + ",z2=" + z2.str() + ")";
  }
};

// Finite-dimensional module at q = 0 given by the action of S, U (and eps1 on
// regular components).
struct ModuleData {
  Component comp = Component::NonRegular;
  FMatrix S, U;
  std::optional<FMatrix> eps1;
  int dim() const { return S.rows(); }
  const GaloisField& field() const { return S.field(); }
};

namespace detail {

inline FMatrix eval_op(const OpMatrix2<Integer>& op, const GaloisField& f, const FieldElem& x, const FieldElem& y,
                       const FieldElem& z2) {
  FMatrix m(f, 2, 2);
  auto conv = [&](const Integer& c) { return f.from_integer(c); };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = op.m[i][j].evaluate(f.zero(), x, y, z2, conv);
  return m;
}

}  // namespace detail

inline ModuleData module_at_point(const ModulePoint& p) {
  const GaloisField& f = *p.field;
  if (p.z2.is_zero()) fail(ErrorKind::InvalidPoint, "z2 must be a unit");
  ModuleData m;
  m.comp = p.comp;
  if (p.comp == Component::NonRegular) {
    m.S = detail::eval_op(rep1_S<Integer>(), f, p.z1, f.zero(), p.z2);
    m.U = detail::eval_op(rep1_U<Integer>(), f, p.z1, f.zero(), p.z2);
  } else {
    if (!(p.x * p.y).is_zero()) fail(ErrorKind::InvalidPoint, "regular point needs x*y = 0");
    m.S = detail::eval_op(rep2(H2Elem<Integer>::S()), f, p.x, p.y, p.z2);
    m.U = detail::eval_op(rep2(H2Elem<Integer>::U()), f, p.x, p.y, p.z2);
    m.eps1 = detail::eval_op(rep2(H2Elem<Integer>::eps1()), f, p.x, p.y, p.z2);
  }
  return m;
}

// Checks the defining relations at q = 0.
inline void verify_relations(const ModuleData& m) {
  const GaloisField& f = m.field();
  int n = m.dim();
  if (m.S.cols() != n || m.U.rows() != n || m.U.cols() != n) fail(ErrorKind::ValidationError, "matrix sizes differ");
  if (m.U.det().is_zero()) fail(ErrorKind::RelationViolation, "U is not invertible");
  FMatrix U2 = m.U * m.U;
  if (U2 * m.S != m.S * U2) fail(ErrorKind::RelationViolation, "U^2 S != S U^2");
  if (m.comp == Component::NonRegular) {
    if (m.S * m.S != m.S.scaled(-f.one()))
      fail(ErrorKind::RelationViolation, "S^2 != -S");
  } else {
    if (!m.eps1) fail(ErrorKind::ValidationError, "regular module needs eps1");
    const FMatrix& e1 = *m.eps1;
    FMatrix e2 = FMatrix::identity(f, n) - e1;
    if (!(m.S * m.S).is_zero()) fail(ErrorKind::RelationViolation, "S^2 != 0");
    if (e1 * e1 != e1) fail(ErrorKind::RelationViolation, "eps1 is not idempotent");
    if (e1 * m.S != m.S * e2) fail(ErrorKind::RelationViolation, "eps1 S != S eps2");
    if (e1 * m.U != m.U * e2) fail(ErrorKind::RelationViolation, "eps1 U != U eps2");
  }
}

// Central character at q = 0. H1: z1 = U(S+1) + SU, z2 = U^2. H2: x from
// US eps1 + SU eps2, y from SU eps1 + US eps2, z2 = U^2.
inline ModulePoint central_character(const ModuleData& m) {
  const GaloisField& f = m.field();
  auto z2 = (m.U * m.U).scalar_value();
  if (!z2) fail(ErrorKind::NoCentralCharacter, "U^2 does not act by a scalar");
  FMatrix I = FMatrix::identity(f, m.dim());
  if (m.comp == Component::NonRegular) {
    auto z1 = (m.U * (m.S + I) + m.S * m.U).scalar_value();
    if (!z1) fail(ErrorKind::NoCentralCharacter, "z1 does not act by a scalar");
    return ModulePoint::nonregular(f, *z1, *z2);
  }
  const FMatrix& e1 = *m.eps1;
  FMatrix e2 = I - e1, US = m.U * m.S, SU = m.S * m.U;
  auto x = (US * e1 + SU * e2).scalar_value();
  auto y = (SU * e1 + US * e2).scalar_value();
  if (!x || !y) fail(ErrorKind::NoCentralCharacter, "centre does not act by scalars");
  return ModulePoint::regular(f, *x, *y, *z2);
}

inline ModulePoint satake_parameter(const ModuleData& m) { return central_character(m); }

namespace detail {

// Lines of F^2 as representative vectors.
inline std::vector<std::vector<FieldElem>> lines2(const GaloisField& f) {
  std::vector<std::vector<FieldElem>> out{{f.zero(), f.one()}};
  for (const auto& t : f.elements()) out.push_back({f.one(), t});
  return out;
}

inline std::optional<FieldElem> eigen_on(const FMatrix& a, const std::vector<FieldElem>& v) {
  auto w = a.apply(v);
  int k = v[0].is_zero() ? 1 : 0;
  FieldElem lam = w[k] / v[k];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != lam * v[i]) return std::nullopt;
  return lam;
}

inline std::vector<FMatrix> generators(const ModuleData& m) {
  std::vector<FMatrix> g{m.S, m.U};
  if (m.eps1) g.push_back(*m.eps1);
  return g;
}

// Common eigenlines of the generators of a 2-dimensional module.
inline std::vector<std::vector<FieldElem>> invariant_lines(const ModuleData& m) {
  std::vector<std::vector<FieldElem>> out;
  auto gens = generators(m);
  for (const auto& v : lines2(m.field())) {
    bool ok = true;
    for (const auto& g : gens)
      if (!eigen_on(g, v)) { ok = false; break; }
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace detail

struct H1Character {
  FieldElem S, U;
  bool operator==(const H1Character& o) const { return S == o.S && U == o.U; }
  bool operator<(const H1Character& o) const {
    return std::make_pair(S.index(), U.index()) < std::make_pair(o.S.index(), o.U.index());
  }
};

struct ClassRecord {
  Component comp = Component::NonRegular;
  int dim = 0;
  ModulePoint central;
  bool simple = false;
  bool supersingular = false;
  std::string cls;                        // character | standard | character-pair | extension
  std::vector<H1Character> constituents;  // for characters and non-simple H1 modules (sub first)
  bool antispherical = false;             // same constituents as the standard module at this point

  bool operator==(const ClassRecord& o) const {
    return comp == o.comp && dim == o.dim && central == o.central && simple == o.simple &&
           supersingular == o.supersingular && cls == o.cls && constituents == o.constituents;
  }
  bool operator!=(const ClassRecord& o) const { return !(*this == o); }
};

// The pair {(0, z1), (-1, -z1)} of characters with central character (z1, z1^2).
inline std::vector<H1Character> antispherical_pair(const GaloisField& f, const FieldElem& z1) {
  std::vector<H1Character> v{{f.zero(), z1}, {-f.one(), -z1}};
  std::sort(v.begin(), v.end());
  return v;
}

inline ClassRecord classify(const ModuleData& m) {
  verify_relations(m);
  const GaloisField& f = m.field();
  ClassRecord r;
  r.comp = m.comp;
  r.dim = m.dim();
  r.central = central_character(m);
  r.supersingular = r.central.supersingular();
  if (m.comp == Component::NonRegular && m.dim() == 1) {
    r.simple = true;
    r.cls = "character";
    r.constituents = {{m.S(0, 0), m.U(0, 0)}};
    return r;
  }
  if (m.dim() != 2) fail(ErrorKind::ValidationError, "only modules of dimension 1 or 2 are classified");
  auto lines = detail::invariant_lines(m);
  r.simple = lines.empty();
  if (m.comp == Component::Regular) {
    // H2 at any central character is a 2x2 matrix algebra
    if (!r.simple) fail(ErrorKind::ComparisonFailure, "regular 2-dimensional module is not simple");
    r.cls = "standard";
    r.antispherical = true;
    return r;
  }
  bool closed_simple = r.central.z2 != r.central.z1 * r.central.z1;
  if (closed_simple != r.simple) fail(ErrorKind::ComparisonFailure, "simplicity criterion disagrees with line search");
  if (r.simple) {
    r.cls = "standard";
    r.antispherical = true;
    return r;
  }
  auto character_on = [&](const std::vector<FieldElem>& v) {
    return H1Character{*detail::eigen_on(m.S, v), *detail::eigen_on(m.U, v)};
  };
  H1Character sub = character_on(lines[0]);
  H1Character quo{m.S.trace() - sub.S, m.U.trace() - sub.U};
  if (lines.size() >= 2) {
    r.cls = "character-pair";
    r.constituents = {sub, quo};
    std::sort(r.constituents.begin(), r.constituents.end());
  } else {
    r.cls = "extension";
    r.constituents = {sub, quo};
  }
  auto sorted = r.constituents;
  std::sort(sorted.begin(), sorted.end());
  r.antispherical = sorted == antispherical_pair(f, r.central.z1);
  return r;
}

// P with P g1 = g2 P for all generators, if one exists.
inline std::optional<FMatrix> find_intertwiner(const ModuleData& a, const ModuleData& b) {
  if (a.comp != b.comp || a.dim() != b.dim()) return std::nullopt;
  const GaloisField& f = a.field();
  int n = a.dim();
  auto ga = detail::generators(a), gb = detail::generators(b);
  if (ga.size() != gb.size()) return std::nullopt;
  // unknown P(i,k) at index i*n + k; equation (gb P - P ga)(i,j) = 0
  FMatrix sys(f, static_cast<int>(ga.size()) * n * n, n * n);
  int row = 0;
  for (std::size_t g = 0; g < ga.size(); ++g)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j, ++row) {
        for (int k = 0; k < n; ++k) {
          sys(row, k * n + j) += gb[g](i, k);
          sys(row, i * n + k) -= ga[g](k, j);
        }
      }
  auto ns = sys.nullspace();
  auto to_mat = [&](const std::vector<FieldElem>& v) {
    FMatrix p(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) p(i, k) = v[i * n + k];
    return p;
  };
  for (const auto& v : ns) {
    FMatrix p = to_mat(v);
    if (!p.det().is_zero()) return p;
  }
  if (ns.size() >= 2) {
    // a fixed sweep of small combinations
    for (const auto& c : f.elements()) {
      std::vector<FieldElem> v(n * n, f.zero());
      for (std::size_t b2 = 0; b2 < ns.size(); ++b2) {
        FieldElem w = b2 == 0 ? f.one() : c.pow(static_cast<long>(b2));
        for (int i = 0; i < n * n; ++i) v[i] += w * ns[b2][i];
      }
      FMatrix p = to_mat(v);
      if (!p.det().is_zero()) return p;
    }
  }
  return std::nullopt;
}

inline ModuleData change_basis(const ModuleData& m, const FMatrix& p) {
  FMatrix pi = p.inverse();
  ModuleData r = m;
  r.S = p * m.S * pi;
  r.U = p * m.U * pi;
  if (m.eps1) r.eps1 = p * *m.eps1 * pi;
  return r;
}

// Joint eigenvalues (x, y) of X and Y with multiplicity, z2 appended.
inline std::vector<std::array<FieldElem, 3>> bernstein_support(const ModuleData& m) {
  verify_relations(m);
  const GaloisField& f = m.field();
  FMatrix I = FMatrix::identity(f, m.dim());
  FMatrix X = m.comp == Component::NonRegular ? m.U * (m.S + I) : m.U * m.S;
  FMatrix Y = m.S * m.U;
  auto z2 = (m.U * m.U).scalar_value();
  if (!z2) fail(ErrorKind::NoCentralCharacter, "U^2 does not act by a scalar");
  std::vector<std::array<FieldElem, 3>> out;
  if (m.dim() == 1) {
    out.push_back({X(0, 0), Y(0, 0), *z2});
    return out;
  }
  if (m.dim() != 2) fail(ErrorKind::ValidationError, "support only for dimension <= 2");
  for (const auto& v : detail::lines2(f)) {
    auto x = detail::eigen_on(X, v), y = detail::eigen_on(Y, v);
    if (x && y) {
      out.push_back({*x, *y, *z2});
      out.push_back({X.trace() - *x, Y.trace() - *y, *z2});
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a[0].index(), a[1].index()) < std::make_pair(b[0].index(), b[1].index());
      });
      return out;
    }
  }
  fail(ErrorKind::ValidationError, "X and Y have no common eigenvector over " + f.name());
}

// Kernel of H1 -> End(A1) at the parabola point (z1, z1^2), q = 0, as
// coefficients of (1, S, U, SU), normalized so that the U-coefficient is 1.
inline std::vector<FieldElem> kernel_at_parabola(const GaloisField& f, const FieldElem& z1, const FieldElem& z2) {
  if (z2.is_zero()) fail(ErrorKind::InvalidPoint, "z2 must be a unit");
  if (z2 != z1 * z1) fail(ErrorKind::NotOnParabola, "z2 != z1^2");
  ModuleData m = module_at_point(ModulePoint::nonregular(f, z1, z2));
  FMatrix I = FMatrix::identity(f, 2);
  std::array<FMatrix, 4> b{I, m.S, m.U, m.S * m.U};
  FMatrix sys(f, 4, 4);
  for (int j = 0; j < 4; ++j) {
    sys(0, j) = b[j](0, 0);
    sys(1, j) = b[j](0, 1);
    sys(2, j) = b[j](1, 0);
    sys(3, j) = b[j](1, 1);
  }
  auto ns = sys.nullspace();
  if (ns.size() != 1) fail(ErrorKind::ComparisonFailure, "kernel is not one-dimensional");
  auto v = ns[0];
  FieldElem s = v[2].inverse();
  for (auto& x : v) x *= s;
  return v;
}

struct AtlasRow {
  ModulePoint point;
  ClassRecord record;
};

struct AtlasResult {
  int q0 = 0, m = 0;
  Component comp = Component::NonRegular;
  std::vector<AtlasRow> rows;
  int supersingular = 0, parabola = 0, simple = 0;
};

inline std::vector<ModulePoint> atlas_points(const GaloisField& f, Component comp) {
  std::vector<ModulePoint> pts;
  for (const auto& z2 : f.elements()) {
    if (z2.is_zero()) continue;
    if (comp == Component::NonRegular) {
      for (const auto& z1 : f.elements()) pts.push_back(ModulePoint::nonregular(f, z1, z2));
    } else {
      for (const auto& x : f.elements()) pts.push_back(ModulePoint::regular(f, x, f.zero(), z2));
      for (const auto& y : f.elements())
        if (!y.is_zero()) pts.push_back(ModulePoint::regular(f, f.zero(), y, z2));
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline int parallelism_from_env() {
  const char* s = std::getenv("GENHECKE_THREADS");
  if (!s) return 1;
  int n = std::atoi(s);
  return n < 1 ? 1 : std::min(n, 64);
}

inline AtlasResult classify_atlas(int q0, int m, Component comp, int threads = 1) {
  const GaloisField& f = GaloisField::get(q0, m);
  AtlasResult res;
  res.q0 = q0;
  res.m = m;
  res.comp = comp;
  auto pts = atlas_points(f, comp);
  res.rows.resize(pts.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < pts.size(); i += step)
      res.rows[i] = AtlasRow{pts[i], classify(module_at_point(pts[i]))};
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try { work(static_cast<std::size_t>(t), static_cast<std::size_t>(threads)); }
        catch (...) { errs[t] = std::current_exception(); }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  for (const auto& row : res.rows) {
    res.supersingular += row.record.supersingular;
    res.simple += row.record.simple;
    res.parabola += row.point.on_parabola() && !row.point.z1.is_zero();
  }
  return res;
}

}  // namespace genhecke
