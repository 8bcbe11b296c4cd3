#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <tuple>
#include <vector>

#include "genhecke/cyclotomic.hpp"
#include "genhecke/errors.hpp"

namespace genhecke {

inline int mod_pos(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

inline int check_q0(int q0) {
  if (q0 < 2 || !GaloisField::prime_of_power(q0))
    fail(ErrorKind::ValidationError, "q0 must be a prime power, got " + std::to_string(q0));
  return q0;
}

// Element (g^e1, g^e2) of T = (F_q0^x)^2; exponents are taken mod n = q0 - 1.
struct TorusElem {
  int n = 1;
  int e1 = 0, e2 = 0;

  static TorusElem make(int n, long e1, long e2) { return {n, mod_pos(e1, n), mod_pos(e2, n)}; }
  TorusElem operator*(const TorusElem& o) const {
    check(o);
    return make(n, e1 + o.e1, e2 + o.e2);
  }
  TorusElem inverse() const { return make(n, -e1, -e2); }
  TorusElem swapped() const { return {n, e2, e1}; }
  bool is_identity() const { return e1 == 0 && e2 == 0; }
  auto key() const { return std::tie(n, e1, e2); }
  bool operator==(const TorusElem& o) const { return key() == o.key(); }
  bool operator!=(const TorusElem& o) const { return !(*this == o); }
  bool operator<(const TorusElem& o) const { return key() < o.key(); }
  void check(const TorusElem& o) const {
    if (n != o.n) fail(ErrorKind::ParameterMismatch, "torus elements for different q0");
  }
};

inline std::vector<TorusElem> torus_elements(int q0) {
  int n = check_q0(q0) - 1;
  std::vector<TorusElem> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back({n, a, b});
  return out;
}

// Image of the cocharacter (1,-1): elements (x, x^-1).
inline std::vector<TorusElem> coroot_torus(int q0) {
  int n = check_q0(q0) - 1;
  std::vector<TorusElem> out;
  for (int e = 0; e < n; ++e) out.push_back(TorusElem::make(n, e, -e));
  return out;
}

// (t, lambda, w) in T x Lambda x| W0 with W0 = {1, s} swapping coordinates.
struct ExtendedWeylElem {
  TorusElem t;
  int l1 = 0, l2 = 0;
  bool s = false;

  static ExtendedWeylElem identity(int q0) { return {{check_q0(q0) - 1, 0, 0}, 0, 0, false}; }
  static ExtendedWeylElem torus(int q0, long e1, long e2) {
    return {TorusElem::make(check_q0(q0) - 1, e1, e2), 0, 0, false};
  }
  static ExtendedWeylElem translation(int q0, int a, int b) { return {{check_q0(q0) - 1, 0, 0}, a, b, false}; }
  static ExtendedWeylElem gen_s(int q0) { return {{check_q0(q0) - 1, 0, 0}, 0, 0, true}; }
  static ExtendedWeylElem gen_s0(int q0) { return {{check_q0(q0) - 1, 0, 0}, 1, -1, true}; }
  static ExtendedWeylElem gen_u(int q0) { return {{check_q0(q0) - 1, 0, 0}, 1, 0, true}; }

  int q0() const { return t.n + 1; }

  ExtendedWeylElem operator*(const ExtendedWeylElem& o) const {
    t.check(o.t);
    ExtendedWeylElem r;
    r.t = t * (s ? o.t.swapped() : o.t);
    r.l1 = l1 + (s ? o.l2 : o.l1);
    r.l2 = l2 + (s ? o.l1 : o.l2);
    r.s = s != o.s;
    return r;
  }
  ExtendedWeylElem inverse() const {
    TorusElem ti = s ? t.swapped().inverse() : t.inverse();
    int a = s ? -l2 : -l1, b = s ? -l1 : -l2;
    return {ti, a, b, s};
  }
  // t * self, self * t
  ExtendedWeylElem with_torus(const TorusElem& tt) const {
    ExtendedWeylElem r = *this;
    r.t = t * tt;
    return r;
  }
  ExtendedWeylElem without_torus() const {
    ExtendedWeylElem r = *this;
    r.t = {t.n, 0, 0};
    return r;
  }
  bool is_identity() const { return t.is_identity() && l1 == 0 && l2 == 0 && !s; }

  auto key() const { return std::tie(s, l1, l2, t); }
  bool operator==(const ExtendedWeylElem& o) const { return key() == o.key(); }
  bool operator!=(const ExtendedWeylElem& o) const { return !(*this == o); }
  bool operator<(const ExtendedWeylElem& o) const { return key() < o.key(); }

  std::string str() const {
    std::string out = "(t=[" + std::to_string(t.e1) + "," + std::to_string(t.e2) + "],lambda=(" +
                      std::to_string(l1) + "," + std::to_string(l2) + ")";
    out += s ? ",s)" : ",1)";
    return out;
  }
};

// Length: l(e^(a,b)) = |a-b|, l(e^(a,b) s) = |a-b-1|; the torus does not contribute.
inline int weyl_length(const ExtendedWeylElem& w) {
  return w.s ? std::abs(w.l1 - w.l2 - 1) : std::abs(w.l1 - w.l2);
}

inline ExtendedWeylElem conjugate(const ExtendedWeylElem& g, const ExtendedWeylElem& h) {
  return g * h * g.inverse();
}

inline ExtendedWeylElem u_power(int q0, long k) {
  ExtendedWeylElem u = ExtendedWeylElem::gen_u(q0), ui = u.inverse(), r = ExtendedWeylElem::identity(q0);
  for (long i = 0; i < std::labs(k); ++i) r = r * (k > 0 ? u : ui);
  return r;
}

enum class AffGen { S0, S };

// w = t * word * u^k with word reduced in {s0, s}.
struct ReducedWord {
  std::vector<AffGen> word;
  int u_power = 0;
  TorusElem t;

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) out += ",";
      out += word[i] == AffGen::S0 ? "s0" : "s";
    }
    return out + "] u^" + std::to_string(u_power);
  }
};

inline ExtendedWeylElem aff_gen(int q0, AffGen g) {
  return g == AffGen::S0 ? ExtendedWeylElem::gen_s0(q0) : ExtendedWeylElem::gen_s(q0);
}

inline ReducedWord reduced_word(const ExtendedWeylElem& a) {
  int q0 = a.q0();
  ReducedWord r;
  r.t = a.t;
  r.u_power = a.l1 + a.l2;
  ExtendedWeylElem x = a.without_torus() * u_power(q0, -r.u_power);
  std::deque<AffGen> word;
  while (!x.is_identity()) {
    int len = weyl_length(x);
    bool moved = false;
    for (AffGen g : {AffGen::S0, AffGen::S}) {
      ExtendedWeylElem y = x * aff_gen(q0, g);
      if (weyl_length(y) < len) {
        word.push_front(g);
        x = y;
        moved = true;
        break;
      }
    }
    if (!moved) fail(ErrorKind::RelationViolation, "no descent found for " + x.str());
  }
  r.word.assign(word.begin(), word.end());
  return r;
}

inline ExtendedWeylElem word_product(int q0, const ReducedWord& r) {
  ExtendedWeylElem x = ExtendedWeylElem::torus(q0, r.t.e1, r.t.e2);
  for (AffGen g : r.word) x = x * aff_gen(q0, g);
  return x * u_power(q0, r.u_power);
}

// Character (a1, a2): (g^e1, g^e2) -> zeta^(a1 e1 + a2 e2), exponents mod n = q0 - 1.
struct TorusCharacter {
  int n = 1;
  int a1 = 0, a2 = 0;

  static TorusCharacter make(int q0, long a1, long a2) {
    int n = check_q0(q0) - 1;
    return {n, mod_pos(a1, n), mod_pos(a2, n)};
  }
  int q0() const { return n + 1; }
  TorusCharacter swapped() const { return {n, a2, a1}; }
  TorusCharacter inverse() const { return {n, mod_pos(-a1, n), mod_pos(-a2, n)}; }
  bool is_regular() const { return a1 != a2; }
  int exponent_at(const TorusElem& t) const {
    if (t.n != n) fail(ErrorKind::ParameterMismatch, "character and torus element for different q0");
    return mod_pos(static_cast<long>(a1) * t.e1 + static_cast<long>(a2) * t.e2, n);
  }
  CycloLoc value(const TorusElem& t) const { return CycloLoc::zeta_pow(n, exponent_at(t)); }
  auto key() const { return std::tie(n, a1, a2); }
  bool operator==(const TorusCharacter& o) const { return key() == o.key(); }
  bool operator!=(const TorusCharacter& o) const { return !(*this == o); }
  bool operator<(const TorusCharacter& o) const { return key() < o.key(); }
  std::string str() const { return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }
};

inline std::vector<TorusCharacter> enumerate_characters(int q0) {
  int n = check_q0(q0) - 1;
  std::vector<TorusCharacter> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.push_back({n, a, b});
  return out;
}

// W0-orbit of characters; members sorted lexicographically.
struct CharacterOrbit {
  std::vector<TorusCharacter> members;
  bool regular() const { return members.size() == 2; }
  const TorusCharacter& representative() const { return members.front(); }
  bool operator==(const CharacterOrbit& o) const { return members == o.members; }
  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + members[i].str();
    return out + "}";
  }
};

inline CharacterOrbit orbit_of(const TorusCharacter& c) {
  CharacterOrbit o;
  o.members.push_back(c);
  if (c.is_regular()) o.members.push_back(c.swapped());
  std::sort(o.members.begin(), o.members.end());
  return o;
}

inline std::vector<CharacterOrbit> enumerate_orbits(int q0) {
  std::vector<CharacterOrbit> out;
  for (const auto& c : enumerate_characters(q0))
    if (!(c.swapped() < c)) out.push_back(orbit_of(c));
  return out;
}

}  // namespace genhecke
