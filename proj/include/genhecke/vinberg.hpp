#pragma once

#include <array>
#include <string>
#include <vector>

#include "genhecke/fmatrix.hpp"
#include "genhecke/poly.hpp"
#include "genhecke/theta.hpp"

namespace genhecke {

// Character-monoid models. Every ring here is presented by character data only.
enum class MonoidName { VT, VB, VT0, VB0, T, VGL2, VGL20 };

inline std::string monoid_str(MonoidName n) {
  switch (n) {
    case MonoidName::VT: return "VT";
    case MonoidName::VB: return "VB";
    case MonoidName::VT0: return "VT0";
    case MonoidName::VB0: return "VB0";
    case MonoidName::T: return "T";
    case MonoidName::VGL2: return "VGL2";
    case MonoidName::VGL20: return "VGL20";
  }
  return "?";
}

inline MonoidName parse_monoid(const std::string& s) {
  for (auto n : {MonoidName::VT, MonoidName::VB, MonoidName::VT0, MonoidName::VB0, MonoidName::T, MonoidName::VGL2,
                 MonoidName::VGL20})
    if (monoid_str(n) == s) return n;
  fail(ErrorKind::ValidationError, "unknown ring '" + s + "'");
}

inline bool is_zero_fiber(MonoidName n) {
  return n == MonoidName::VT0 || n == MonoidName::VB0 || n == MonoidName::VGL20;
}

// X^m1 Y^m2 z2^m3 with m1, m2 >= 0.
struct MonoidCharacter {
  int m1 = 0, m2 = 0, m3 = 0;
  auto key() const { return std::tie(m1, m2, m3); }
  bool operator<(const MonoidCharacter& o) const { return key() < o.key(); }
  bool operator==(const MonoidCharacter& o) const { return key() == o.key(); }
  MonoidCharacter swapped() const { return {m2, m1, m3}; }
  MonoidCharacter operator*(const MonoidCharacter& o) const { return {m1 + o.m1, m2 + o.m2, m3 + o.m3}; }
  void validate() const {
    if (m1 < 0 || m2 < 0) fail(ErrorKind::ValidationError, "character exponents of X and Y must be non-negative");
  }
};

struct RepRingDescriptor {
  MonoidName name;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::string basis;
  std::string product;
};

inline RepRingDescriptor rep_ring(MonoidName n) {
  switch (n) {
    case MonoidName::VT:
    case MonoidName::VB:
      return {n, {"X", "Y", "z2", "z2^-1"}, {}, "X^m1*Y^m2*z2^m3, m1,m2>=0", "monoid ring"};
    case MonoidName::VT0:
    case MonoidName::VB0:
      return {n, {"X", "Y", "z2", "z2^-1", "0"}, {"X*Y=[0]"}, "(X^m*z2^k | Y^m*z2^k) x zero class",
              "(Z[X,Y,z2^+-1]/(XY)) x Z, componentwise in (main, dim)"};
    case MonoidName::T:
      return {n, {"X", "X^-1", "Y", "Y^-1"}, {"z2=X*Y"}, "X^a*Y^b", "Laurent ring"};
    case MonoidName::VGL2:
      return {n, {"z1", "q", "z2", "z2^-1"}, {}, "z1^a*q^b*z2^k", "polynomial ring (W0-invariants of VT)"};
    case MonoidName::VGL20:
      return {n, {"z1", "z2", "z2^-1"}, {}, "z1^a*z2^k", "polynomial ring (W0-invariants of VT0)"};
  }
  fail(ErrorKind::ValidationError, "unknown ring");
}

// Free character ring Z[X, Y, z2^+-1].
using FreeClass = MPoly<Integer, 3>;
inline const std::array<const char*, 3>& free_names() {
  static const std::array<const char*, 3> n{"X", "Y", "z2"};
  return n;
}
// Fiber q = 1: Z[X^+-1, Y^+-1].
using LaurentClass = MPoly<Integer, 2>;
inline const std::array<const char*, 2>& laurent_names() {
  static const std::array<const char*, 2> n{"X", "Y"};
  return n;
}

inline FreeClass character_class(const MonoidCharacter& c) {
  c.validate();
  return FreeClass::monomial(Integer(1), {c.m1, c.m2, c.m3});
}

// q = X Y z2^-1
inline FreeClass theta_to_free(const ThetaElem<Integer>& a) {
  FreeClass out;
  for (auto& [mo, c] : a.terms()) {
    int x = std::max(mo.m, 0) + mo.qe, y = std::max(-mo.m, 0) + mo.qe;
    out.add_term({x, y, mo.z - mo.qe}, c);
  }
  return out;
}

inline ThetaElem<Integer> free_to_theta(const FreeClass& f) {
  ThetaElem<Integer> out;
  for (auto& [e, c] : f.terms()) {
    if (e[0] < 0 || e[1] < 0) fail(ErrorKind::ValidationError, "negative X or Y exponent");
    int r = std::min(e[0], e[1]);
    out.add_term({e[0] - e[1], e[2] + r, r}, c);
  }
  return out;
}

inline LaurentClass q_fiber_one(const FreeClass& f) {
  LaurentClass out;
  for (auto& [e, c] : f.terms()) out.add_term({e[0] + e[2], e[1] + e[2]}, c);
  return out;
}

inline FiberElem<Integer> q_fiber_zero(const FreeClass& f) {
  return FiberElem<Integer>::from_theta(free_to_theta(f), Integer(0));
}

// Sum of coefficients of a class on the zero fiber.
inline Integer augmentation(const FiberElem<Integer>& f) {
  Integer s = 0;
  for (auto& [k, v] : f.terms()) s += v;
  return s;
}

// R(V_T,0): main part in Z[X,Y,z2^+-1]/(XY) plus the multiplicity of the zero character.
struct RVT0Class {
  FiberElem<Integer> main{Integer(0)};
  Integer zero_mult = 0;

  static RVT0Class from_main(FiberElem<Integer> m, Integer z = 0) {
    if (m.fiber() != 0) fail(ErrorKind::ParameterMismatch, "main part must lie on the fiber q=0");
    RVT0Class c;
    c.main = std::move(m);
    c.zero_mult = std::move(z);
    return c;
  }
  // Class of a representation with the given characters; X*Y lands in the zero slot.
  static RVT0Class from_free(const FreeClass& f) {
    RVT0Class c;
    for (auto& [e, v] : f.terms()) {
      if (e[0] > 0 && e[1] > 0)
        c.zero_mult += v;
      else
        c.main.add_term({e[0] - e[1], e[2]}, v);
    }
    return c;
  }
  Integer dim() const { return augmentation(main) + zero_mult; }

  RVT0Class operator+(const RVT0Class& o) const { return from_main(main + o.main, zero_mult + o.zero_mult); }
  RVT0Class operator-(const RVT0Class& o) const { return from_main(main - o.main, zero_mult - o.zero_mult); }
  RVT0Class operator*(const RVT0Class& o) const {
    FiberElem<Integer> m = main * o.main;
    Integer d = dim() * o.dim();
    Integer a = augmentation(m);
    return from_main(std::move(m), d - a);
  }
  bool operator==(const RVT0Class& o) const { return main == o.main && zero_mult == o.zero_mult; }
  bool operator!=(const RVT0Class& o) const { return !(*this == o); }
  std::string str() const { return "(" + main.str() + ", " + scalar_str(zero_mult) + ")"; }
};

inline RVT0Class relevant_part(const RVT0Class& c) { return RVT0Class::from_main(c.main, 0); }

inline RVT0Class parse_rvt0(const std::string& main_text, const Integer& zero_mult) {
  return RVT0Class::from_main(FiberElem<Integer>::from_theta(parse_theta(main_text), Integer(0)), zero_mult);
}

struct InvariantBasisElem {
  std::string label;
  ThetaElem<Integer> value;  // in the generic theta ring; on zero fibers q does not occur
};

// Monomials z1^a q^b z2^c with a + b + |c| <= degree (b = 0 on zero fibers).
inline std::vector<InvariantBasisElem> invariants_basis(MonoidName n, int degree) {
  if (degree < 0) fail(ErrorKind::ValidationError, "degree must be non-negative");
  const bool with_q = n == MonoidName::VT || n == MonoidName::VB || n == MonoidName::VGL2;
  std::vector<InvariantBasisElem> out;
  for (int total = 0; total <= degree; ++total)
    for (int a = total; a >= 0; --a)
      for (int b = with_q ? total - a : 0; b >= 0; --b) {
        int c = total - a - b;
        for (int sign : {1, -1}) {
          if (c == 0 && sign < 0) continue;
          std::vector<std::string> parts;
          if (a) parts.push_back(power_str("z1", a));
          if (b) parts.push_back(power_str("q", b));
          if (c) parts.push_back(power_str("z2", sign * c));
          ThetaElem<Integer> v =
              ThetaElem<Integer>::z1().pow(static_cast<unsigned>(a)) * ThetaElem<Integer>::q(b) *
              ThetaElem<Integer>::z2(sign * c);
          if (!v.is_symmetric()) fail(ErrorKind::NotInvariant, "basis element is not W0-invariant");
          std::string label = join_monomial(parts);
          out.push_back({label.empty() ? "1" : label, std::move(v)});
        }
      }
  return out;
}

// Simultaneous eigenspaces of the three commuting idempotents of a q = 0 module.
struct BlockPattern {
  int ex, ey, e0;
  std::string label() const {
    return "M(" + std::to_string(ex) + "," + std::to_string(ey) + "," + std::to_string(e0) + ")";
  }
};

struct BlockDecomposition {
  int d100 = 0, d010 = 0, d111 = 0, d000 = 0;
  std::vector<std::pair<BlockPattern, int>> weights;  // all eight patterns with their dimensions
  int total() const { return d100 + d010 + d111 + d000; }
};

inline bool block_pattern_allowed(const BlockPattern& p) {
  return (p.ex & p.ey) == p.e0;
}

inline BlockDecomposition idempotent_block_decompose(const FMatrix& ex, const FMatrix& ey, const FMatrix& e0) {
  int n = ex.rows();
  for (const FMatrix* m : {&ex, &ey, &e0})
    if (m->rows() != n || m->cols() != n) fail(ErrorKind::ValidationError, "matrices must be square of equal size");
  const char* names[] = {"E_X", "E_Y", "E_0"};
  const FMatrix* ms[] = {&ex, &ey, &e0};
  for (int i = 0; i < 3; ++i)
    if (*ms[i] * *ms[i] != *ms[i]) fail(ErrorKind::NotIdempotent, std::string(names[i]) + " is not idempotent");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (*ms[i] * *ms[j] != *ms[j] * *ms[i])
        fail(ErrorKind::NotCommuting, std::string(names[i]) + " and " + names[j] + " do not commute");
  const FMatrix id = FMatrix::identity(ex.field(), n);
  auto proj = [&](const FMatrix& e, int bit) { return bit ? e : id - e; };
  BlockDecomposition d;
  for (int bits = 7; bits >= 0; --bits) {
    BlockPattern p{(bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
    int r = (proj(ex, p.ex) * proj(ey, p.ey) * proj(e0, p.e0)).rank();
    d.weights.emplace_back(p, r);
    if (r == 0) continue;
    if (!block_pattern_allowed(p))
      fail(ErrorKind::ForbiddenPattern, "nonzero block " + p.label() + " of dimension " + std::to_string(r));
    if (p.ex && p.ey) d.d111 = r;
    else if (p.ex) d.d100 = r;
    else if (p.ey) d.d010 = r;
    else d.d000 = r;
  }
  return d;
}

// Restriction, inflation and the characteristic map act as the identity on
// character data; the class records which ring it belongs to.
struct TrackedClass {
  MonoidName ring = MonoidName::VT;
  FreeClass data;
  std::vector<std::string> trail;
  bool operator==(const TrackedClass& o) const { return ring == o.ring && data == o.data; }
};

namespace detail {
inline TrackedClass relabel(const TrackedClass& c, std::initializer_list<MonoidName> from, MonoidName to,
                            const char* map) {
  bool ok = false;
  for (auto f : from) ok = ok || c.ring == f;
  if (!ok) fail(ErrorKind::VariantMismatch, std::string(map) + " is not defined on " + monoid_str(c.ring));
  TrackedClass r = c;
  r.ring = to;
  r.trail.emplace_back(map);
  return r;
}
}  // namespace detail

inline TrackedClass infl(const TrackedClass& c) {
  return detail::relabel(c, {MonoidName::VT, MonoidName::VT0}, c.ring == MonoidName::VT ? MonoidName::VB : MonoidName::VB0,
                         "Infl");
}
inline TrackedClass res(const TrackedClass& c) {
  return detail::relabel(c, {MonoidName::VB, MonoidName::VB0}, c.ring == MonoidName::VB ? MonoidName::VT : MonoidName::VT0,
                         "Res");
}
// c = Ind o Infl, defined on W0-invariant classes.
inline TrackedClass characteristic(const TrackedClass& c) {
  if (!free_to_theta(c.data).is_symmetric()) fail(ErrorKind::NotInvariant, "class is not W0-invariant");
  TrackedClass b = infl(c);
  return detail::relabel(b, {MonoidName::VB, MonoidName::VB0},
                         b.ring == MonoidName::VB ? MonoidName::VGL2 : MonoidName::VGL20, "Ind");
}

}  // namespace genhecke
