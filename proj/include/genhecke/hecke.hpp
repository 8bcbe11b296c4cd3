#pragma once

#include <map>
#include <string>
#include <vector>

#include "genhecke/poly.hpp"
#include "genhecke/theta.hpp"
#include "genhecke/weyl.hpp"

namespace genhecke {

// Element of the generic pro-p Iwahori Hecke algebra in the T-basis,
// coefficients in R[q] (R = Integer or CycloLoc).
template <class R>
class ProPElem {
 public:
  using Coeff = GenPoly<R>;
  using Map = std::map<ExtendedWeylElem, Coeff>;

  explicit ProPElem(int q0) : q0_(check_q0(q0)) {}
  static ProPElem basis(const ExtendedWeylElem& w, const Coeff& c = Coeff(R(1))) {
    ProPElem e(w.q0());
    e.add_term(w, c);
    return e;
  }
  static ProPElem one(int q0) { return basis(ExtendedWeylElem::identity(q0)); }
  static ProPElem T_s(int q0) { return basis(ExtendedWeylElem::gen_s(q0)); }
  static ProPElem T_s0(int q0) { return basis(ExtendedWeylElem::gen_s0(q0)); }
  static ProPElem T_u(int q0) { return basis(ExtendedWeylElem::gen_u(q0)); }
  static ProPElem T_uinv(int q0) { return basis(ExtendedWeylElem::gen_u(q0).inverse()); }
  static ProPElem T_t(int q0, const TorusElem& t) {
    return basis(ExtendedWeylElem::torus(q0, t.e1, t.e2));
  }
  // c_s: sum of T_t over t in the image of the coroot (1,-1).
  static ProPElem c_s(int q0) {
    ProPElem e(q0);
    for (const auto& t : coroot_torus(q0)) e.add_term(ExtendedWeylElem::torus(q0, t.e1, t.e2), Coeff(R(1)));
    return e;
  }

  int q0() const { return q0_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Coeff coeff(const ExtendedWeylElem& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Coeff() : it->second;
  }
  void add_term(const ExtendedWeylElem& w, const Coeff& c) {
    if (w.q0() != q0_) fail(ErrorKind::TagMismatch, "basis element for a different q0");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  ProPElem operator+(const ProPElem& o) const { check(o); ProPElem r = *this; for (auto& [w, c] : o.t_) r.add_term(w, c); return r; }
  ProPElem operator-(const ProPElem& o) const { check(o); ProPElem r = *this; for (auto& [w, c] : o.t_) r.add_term(w, -c); return r; }
  ProPElem operator-() const { ProPElem r(q0_); for (auto& [w, c] : t_) r.t_[w] = -c; return r; }
  ProPElem scaled(const Coeff& s) const {
    ProPElem r(q0_);
    for (auto& [w, c] : t_) r.add_term(w, c * s);
    return r;
  }
  ProPElem operator*(const ProPElem& o) const {
    check(o);
    ProPElem out(q0_);
    for (auto& [w, c] : o.t_) {
      ReducedWord rw = reduced_word(w);
      Map cur = right_torus(t_, rw.t);
      for (AffGen g : rw.word) cur = right_affine(cur, g);
      cur = right_u(cur, rw.u_power);
      for (auto& [v, d] : cur) out.add_term(v, d * c);
    }
    return out;
  }
  ProPElem& operator*=(const ProPElem& o) { return *this = *this * o; }
  ProPElem pow(unsigned k) const {
    ProPElem r = one(q0_), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }
  bool operator==(const ProPElem& o) const { return q0_ == o.q0_ && t_ == o.t_; }
  bool operator!=(const ProPElem& o) const { return !(*this == o); }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto& [w, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*T" + w.str();
    }
    return out;
  }

 private:
  void check(const ProPElem& o) const {
    if (q0_ != o.q0_) fail(ErrorKind::TagMismatch, "pro-p elements for different q0");
  }
  static void add(Map& m, const ExtendedWeylElem& w, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }
  Map right_torus(const Map& in, const TorusElem& t) const {
    if (t.is_identity()) return in;
    Map out;
    ExtendedWeylElem tw = ExtendedWeylElem::torus(q0_, t.e1, t.e2);
    for (auto& [w, c] : in) add(out, w * tw, c);
    return out;
  }
  Map right_u(const Map& in, int k) const {
    if (k == 0) return in;
    ExtendedWeylElem uk = u_power(q0_, k);
    Map out;
    for (auto& [w, c] : in) add(out, w * uk, c);
    return out;
  }
  // T_w T_g = T_wg if l(wg) > l(w), else q T_wg + sum_{t in C} T_wt.
  Map right_affine(const Map& in, AffGen g) const {
    ExtendedWeylElem ge = aff_gen(q0_, g);
    const Coeff qpoly = Coeff::q();
    Map out;
    for (auto& [w, c] : in) {
      ExtendedWeylElem wg = w * ge;
      if (weyl_length(wg) > weyl_length(w)) {
        add(out, wg, c);
      } else {
        add(out, wg, c * qpoly);
        for (const auto& t : coroot_torus(q0_)) add(out, w * ExtendedWeylElem::torus(q0_, t.e1, t.e2), c);
      }
    }
    return out;
  }

  int q0_;
  Map t_;
};

template <class R>
bool is_central(const ProPElem<R>& h) {
  int q0 = h.q0();
  std::vector<ProPElem<R>> gens{ProPElem<R>::T_s(q0), ProPElem<R>::T_u(q0)};
  for (const auto& t : torus_elements(q0)) gens.push_back(ProPElem<R>::T_t(q0, t));
  for (const auto& g : gens)
    if (h * g != g * h) return false;
  return true;
}

// epsilon_lambda = |T|^-1 sum_t lambda^-1(t) T_t. Needs 1/(q0-1), so over Z only when q0 = 2.
template <class R = CycloLoc>
ProPElem<R> idempotent(const TorusCharacter& chi) {
  int q0 = chi.q0(), n = chi.n;
  ProPElem<R> e(q0);
  if constexpr (std::is_same_v<R, Integer>) {
    if (n != 1) fail(ErrorKind::WrongCoefficientRing, "idempotents need 1/(q0-1) and roots of unity");
    e.add_term(ExtendedWeylElem::identity(q0), GenPoly<R>(R(1)));
  } else {
    CycloLoc inv = CycloLoc::from_parts(n, {Integer(1)}, 2);  // 1/n^2
    TorusCharacter dual = chi.inverse();
    for (const auto& t : torus_elements(q0))
      e.add_term(ExtendedWeylElem::torus(q0, t.e1, t.e2), GenPoly<R>(R(dual.value(t) * inv)));
  }
  return e;
}

template <class R = CycloLoc>
ProPElem<R> idempotent(const CharacterOrbit& gamma) {
  ProPElem<R> e(gamma.representative().q0());
  for (const auto& chi : gamma.members) e = e + idempotent<R>(chi);
  return e;
}

// Bernstein element E(lambda) T_t: E(a,b) = X^(a-b) z2^b or Y^(b-a) z2^a with
// X = T_u (T_s - c_s), Y = T_s T_u, z2 = T_u^2.
template <class R>
ProPElem<R> e_element(int q0, int a, int b, const TorusElem& t) {
  using E = ProPElem<R>;
  E X = E::T_u(q0) * (E::T_s(q0) - E::c_s(q0));
  E Y = E::T_s(q0) * E::T_u(q0);
  int k = std::min(a, b);
  E z = E::basis(ExtendedWeylElem::translation(q0, k, k));  // T_u^(2k), length 0
  E core = a >= b ? X.pow(static_cast<unsigned>(a - b)) : Y.pow(static_cast<unsigned>(b - a));
  return core * z * E::T_t(q0, t);
}

template <class R>
ProPElem<R> e_element(int q0, int a, int b) {
  return e_element<R>(q0, a, b, TorusElem{q0 - 1, 0, 0});
}

// Theta-ring image of E(a,b).
template <class R>
ThetaElem<R> e_theta(int a, int b) {
  return a >= b ? ThetaElem<R>::mono(R(1), a - b, b) : ThetaElem<R>::mono(R(1), a - b, a);
}

// Bernstein coordinates of an element of Z[T] (x) A: torus part -> theta element.
template <class R>
using BernsteinImage = std::map<TorusElem, ThetaElem<R>>;

// Expands h in the basis E(lambda) T_t by peeling off maximal-length terms.
template <class R>
BernsteinImage<R> bernstein_iso(const ProPElem<R>& h) {
  int q0 = h.q0();
  BernsteinImage<R> out;
  ProPElem<R> rest = h;
  while (!rest.is_zero()) {
    const ExtendedWeylElem* top = nullptr;
    for (auto& [w, c] : rest.terms())
      if (!top || weyl_length(w) > weyl_length(*top)) top = &w;
    ExtendedWeylElem w = *top;
    if (w.s) fail(ErrorKind::NotInSubalgebra, "term T" + w.str() + " is not in the commutative subalgebra");
    GenPoly<R> c = rest.coeff(w);
    rest = rest - e_element<R>(q0, w.l1, w.l2, w.t).scaled(c);
    ThetaElem<R> img = e_theta<R>(w.l1, w.l2) * ThetaElem<R>::from_poly(c);
    auto it = out.find(w.t);
    if (it == out.end()) out.emplace(w.t, img);
    else {
      it->second += img;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

template <class R>
ProPElem<R> bernstein_inverse(int q0, const BernsteinImage<R>& img) {
  ProPElem<R> out(q0);
  for (auto& [t, theta] : img)
    for (auto& [mo, c] : theta.terms()) {
      // X^m z2^z q^j = E(m+z, z) q^j, Y^m z2^z q^j = E(z, m+z) q^j
      int a = mo.m >= 0 ? mo.m + mo.z : mo.z;
      int b = mo.m >= 0 ? mo.z : -mo.m + mo.z;
      out = out + e_element<R>(q0, a, b, t).scaled(GenPoly<R>::monomial(c, mo.qe));
    }
  return out;
}

}  // namespace genhecke
