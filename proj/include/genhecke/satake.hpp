#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genhecke/models.hpp"

namespace genhecke {

// Spherical Hecke algebra element as a polynomial in T10, T11^+-1 and q.
using SphericalElem = MPoly<Integer, 3>;

inline const std::array<const char*, 3>& spherical_names() {
  static const std::array<const char*, 3> n{"T10", "T11", "q"};
  return n;
}
inline SphericalElem T10() { return SphericalElem::var(0); }
inline SphericalElem T11(int k = 1) { return SphericalElem::var(1, k); }
inline SphericalElem q_spherical() { return SphericalElem::var(2); }

using Coweight = std::pair<int, int>;

inline Coweight dominant(Coweight l) {
  if (l.first < l.second) std::swap(l.first, l.second);
  return l;
}

inline std::string coweight_str(const Coweight& l) {
  return "(" + std::to_string(l.first) + "," + std::to_string(l.second) + ")";
}

// T10 -> X + Y, T11 -> z2.
inline ThetaElem<Integer> satake_iso(const SphericalElem& h) {
  ThetaElem<Integer> out;
  for (auto& [e, c] : h.terms()) {
    if (e[0] < 0 || e[2] < 0) fail(ErrorKind::ValidationError, "negative power of T10 or q");
    out += ThetaElem<Integer>::z1().pow(static_cast<unsigned>(e[0])) * ThetaElem<Integer>::mono(c, 0, e[1], e[2]);
  }
  return out;
}

inline SphericalElem satake_inverse(const ThetaElem<Integer>& a) {
  SteinbergPoly<Integer> p = to_steinberg(a);
  SphericalElem out;
  for (auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

// Recursion constant in T10 T_(n-1,0) = T_(n,0) + c_n T_(n-1,1).
inline SphericalElem recursion_constant(int n) {
  return n == 2 ? q_spherical() + SphericalElem(1) : q_spherical();
}

// T_lambda in terms of the generators.
inline SphericalElem dominant_basis_elem(Coweight lam) {
  lam = dominant(lam);
  int n = lam.first - lam.second;
  SphericalElem prev(1), cur = T10();
  if (n == 0) cur = prev;
  for (int k = 2; k <= n; ++k) {
    SphericalElem next = T10() * cur - recursion_constant(k) * T11() * prev;
    prev = cur;
    cur = next;
  }
  return cur * T11(lam.second);
}

inline ThetaElem<Integer> satake_image_dominant(Coweight lam) { return satake_iso(dominant_basis_elem(lam)); }

// Expansion of a symmetric theta element in the basis S(T_nu).
inline std::map<Coweight, GenPoly<Integer>> expand_dominant(const ThetaElem<Integer>& f) {
  std::map<Coweight, GenPoly<Integer>> out;
  SteinbergPoly<Integer> rest = to_steinberg(f);
  while (!rest.is_zero()) {
    const std::array<int, 3>* top = nullptr;
    for (auto& [e, c] : rest.terms())
      if (!top || e[0] > (*top)[0]) top = &e;
    auto e = *top;
    Integer c = rest.coeff(e);
    Coweight nu{e[0] + e[1], e[1]};
    out[nu].add_term(e[2], c);
    if (out[nu].is_zero()) out.erase(nu);
    rest -= to_steinberg(satake_image_dominant(nu)) * SteinbergPoly<Integer>::monomial(c, {0, 0, e[2]});
  }
  return out;
}

inline std::map<Coweight, GenPoly<Integer>> structure_constants(Coweight lam, Coweight mu) {
  return expand_dominant(satake_image_dominant(lam) * satake_image_dominant(mu));
}

namespace detail {

inline int pval(long j, int p) {
  if (j == 0) return 1 << 20;
  int v = 0;
  while (j % p == 0) { j /= p; ++v; }
  return v;
}

}  // namespace detail

// Number of cosets xK in K pi_lam K with x^-1 pi_nu in K pi_mu K over Q_p.
inline long hall_oracle(Coweight lam, Coweight mu, Coweight nu, int p) {
  if (!GaloisField::is_prime(p)) fail(ErrorKind::ValidationError, "lattice count needs a prime q0");
  for (const auto& w : {lam, mu, nu})
    if (std::abs(w.first) > 4 || std::abs(w.second) > 4) fail(ErrorKind::BoundExceeded, "coweight entries must be <= 4");
  lam = dominant(lam);
  mu = dominant(mu);
  nu = dominant(nu);
  int shift = lam.second + mu.second;
  Coweight l{lam.first - lam.second, 0}, m{mu.first - mu.second, 0};
  Coweight g{nu.first - shift, nu.second - shift};
  if (g.first + g.second != l.first + m.first) return 0;
  int d = l.first;
  long total = 0;
  long pi = 1;
  for (int i = 0; i <= d; ++i, pi *= p) {
    int k = d - i;
    for (long j = 0; j < pi; ++j) {
      int vj = detail::pval(j, p);
      int content = std::min({i, vj, k});
      if (content != l.second) continue;
      // x^-1 g = [[p^(g1-i), -j p^(g2-i-k)], [0, p^(g2-k)]]
      int c2 = std::min({g.first - i, vj >= (1 << 20) ? (1 << 20) : vj + g.second - i - k, g.second - k});
      int det2 = g.first + g.second - d;
      if (det2 - c2 == m.first && c2 == m.second) ++total;
    }
    if (pi > 10000000L / p) fail(ErrorKind::BoundExceeded, "lattice count too large");
  }
  return total;
}

// Spherical -> centre of H1: T10 -> z1 = U(S - (q-1)) + SU, T11 -> U^2.
inline H1Elem<Integer> central_elements(const SphericalElem& h) {
  using H = H1Elem<Integer>;
  const H S = H::S(), U = H::U(), Ui = H::Uinv();
  const H z1 = U * (S - H::central(ThetaElem<Integer>::q() - ThetaElem<Integer>(1))) + S * U;
  const H z2 = U * U, z2i = Ui * Ui;
  H out;
  for (auto& [e, c] : h.terms()) {
    if (e[0] < 0 || e[2] < 0) fail(ErrorKind::ValidationError, "negative power of T10 or q");
    H term = H::central(ThetaElem<Integer>::mono(c, 0, 0, e[2]));
    term = term * z1.pow(static_cast<unsigned>(e[0]));
    term = term * (e[1] >= 0 ? z2 : z2i).pow(static_cast<unsigned>(std::abs(e[1])));
    out = out + term;
  }
  return out;
}

struct HerzigRow {
  std::string label;
  std::string lhs, rhs;
  bool ok = false;
};

struct HerzigReport {
  int q0 = 0;
  std::vector<HerzigRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.ok) return false;
    return true;
  }
};

namespace detail {

using TorusPoly = MPoly<Rational, 2>;  // Q[X^+-1, Y^+-1], X = e^(1,0), Y = e^(0,1)

inline TorusPoly herzig_image(const SphericalElem& h, int q0) {
  const TorusPoly t10 = TorusPoly::monomial(Rational(q0), {1, 0}) + TorusPoly::var(1);
  TorusPoly out;
  for (auto& [e, c] : h.terms()) {
    Rational coef = Rational(c);
    for (int i = 0; i < e[2]; ++i) coef *= q0;
    out += t10.pow(static_cast<unsigned>(e[0])) * TorusPoly::monomial(coef, {e[1], e[1]});
  }
  return out;
}

// X -> q0^-1 X on Q[X^+-1, Y^+-1], landing in the fiber XY = q0 z2.
inline FiberElem<Rational> rescale_to_fiber(const TorusPoly& t, int q0) {
  FiberElem<Rational> out{Rational(q0)};
  for (auto& [e, c] : t.terms()) {
    int a = e[0], b = e[1], k = std::min(a, b);
    Rational coef = c;
    // X^a Y^b = (XY)^k X^(a-k) Y^(b-k), XY = q0 z2
    Rational s = 1;
    for (int i = 0; i < std::abs(k); ++i) s *= q0;
    coef = k >= 0 ? Rational(coef * s) : Rational(coef / s);
    Rational r = 1;
    for (int i = 0; i < std::abs(a); ++i) r *= q0;
    coef = a >= 0 ? Rational(coef / r) : Rational(coef * r);
    out.add_term({a - b, k}, coef);
  }
  return out;
}

}  // namespace detail

// Compares the integral Satake map with the unnormalized one
// T10 -> q0 e^(1,0) + e^(0,1), T11 -> e^(1,1), generically (after rescaling
// X by q0^-1) and mod p (where e^(0,1) -> z1, e^(1,1) -> z2).
inline HerzigReport herzig_compare(int q0, int max_degree = 3) {
  check_q0(q0);
  int p = GaloisField::prime_of_power(q0);
  HerzigReport rep;
  rep.q0 = q0;
  std::vector<std::pair<std::string, SphericalElem>> items{{"T10", T10()}, {"T11", T11()}};
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; b <= a; ++b)
      if (a + b > 1 || a > 1) items.emplace_back("T" + coweight_str({a, b}), dominant_basis_elem({a, b}));
  for (const auto& [label, h] : items) {
    auto img = detail::herzig_image(h, q0);
    // generic fiber q = q0
    auto lhs = detail::rescale_to_fiber(img, q0);
    ThetaElem<Rational> sat = theta_cast<Rational>(satake_iso(h));
    auto rhs = FiberElem<Rational>::from_theta(sat, Rational(q0));
    rep.rows.push_back({label + " at q=" + std::to_string(q0), lhs.str(), rhs.str(), lhs == rhs});
    // mod p
    SteinbergPoly<Integer> herz, ours;
    bool shape_ok = true;
    for (auto& [e, c] : img.terms()) {
      if (boost::multiprecision::denominator(c) != 1) { shape_ok = false; continue; }
      Integer v = boost::multiprecision::numerator(c) % p;
      if (v < 0) v += p;
      if (v == 0) continue;
      if (e[0] > e[1]) { shape_ok = false; continue; }
      herz.add_term({e[1] - e[0], e[0], 0}, v);
    }
    const SteinbergPoly<Integer> st = to_steinberg(satake_iso(h));
    for (auto& [e, c] : st.terms()) {
      if (e[2] != 0) continue;
      Integer v = c % p;
      if (v < 0) v += p;
      if (v != 0) ours.add_term({e[0], e[1], 0}, v);
    }
    rep.rows.push_back({label + " mod " + std::to_string(p), herz.str(steinberg_names()), ours.str(steinberg_names()),
                        shape_ok && herz == ours});
  }
  return rep;
}

}  // namespace genhecke
