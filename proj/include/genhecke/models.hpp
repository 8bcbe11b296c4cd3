#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "genhecke/hecke.hpp"

namespace genhecke {

namespace detail {

// Writes f = alpha + beta*Y with alpha, beta symmetric.
template <class R>
std::pair<ThetaElem<R>, ThetaElem<R>> split_1Y(const ThetaElem<R>& f) {
  using C = ThetaElem<R>;
  const C z1 = C::z1(), qz2 = C::q() * C::z2();
  auto mulY = [&](const std::pair<C, C>& v) { return std::pair<C, C>{-(qz2 * v.second), v.first + z1 * v.second}; };
  auto mulX = [&](const std::pair<C, C>& v) {
    auto y = mulY(v);
    return std::pair<C, C>{z1 * v.first - y.first, z1 * v.second - y.second};
  };
  std::map<int, std::pair<C, C>> cache;
  cache[0] = {C(R(1)), C()};
  auto power = [&](int m) {
    int step = m > 0 ? 1 : -1;
    int have = 0;
    for (auto& [k, v] : cache)
      if ((k >= 0) == (m >= 0) && std::abs(k) <= std::abs(m) && std::abs(k) > std::abs(have)) have = k;
    std::pair<C, C> v = cache[have];
    for (int k = have + step; std::abs(k) <= std::abs(m); k += step) {
      v = step > 0 ? mulX(v) : mulY(v);
      cache[k] = v;
    }
    return v;
  };
  C alpha, beta;
  for (auto& [mo, c] : f.terms()) {
    auto v = power(mo.m);
    C s = C::mono(c, 0, mo.z, mo.qe);
    alpha += s * v.first;
    beta += s * v.second;
  }
  return {alpha, beta};
}

}  // namespace detail

// H1(q): basis {1, S, U, SU} over its centre Z[q][z1, z2^+-1], the centre kept
// as symmetric theta elements. With q_value set, q is specialized to it.
template <class R>
class H1Elem {
 public:
  using C = ThetaElem<R>;
  enum Basis { One = 0, S_ = 1, U_ = 2, SU_ = 3 };

  H1Elem() = default;
  explicit H1Elem(std::optional<R> qv) : qv_(std::move(qv)) {}
  static H1Elem from_coeffs(const std::array<C, 4>& c, std::optional<R> qv = std::nullopt) {
    for (const auto& x : c)
      if (!x.is_symmetric()) fail(ErrorKind::NotInvariant, "H1 coefficients must be central: " + x.str());
    H1Elem h(qv);
    h.c_ = c;
    h.normalize();
    return h;
  }
  static H1Elem basis(int i, std::optional<R> qv = std::nullopt) {
    H1Elem h(qv);
    h.c_[i] = C(R(1));
    return h;
  }
  static H1Elem one(std::optional<R> qv = std::nullopt) { return basis(One, qv); }
  static H1Elem S(std::optional<R> qv = std::nullopt) { return basis(S_, qv); }
  static H1Elem U(std::optional<R> qv = std::nullopt) { return basis(U_, qv); }
  static H1Elem SU(std::optional<R> qv = std::nullopt) { return basis(SU_, qv); }
  static H1Elem Uinv(std::optional<R> qv = std::nullopt) {
    H1Elem h(qv);
    h.c_[U_] = C::z2(-1);
    return h;
  }
  static H1Elem central(const C& a, std::optional<R> qv = std::nullopt) {
    return from_coeffs({a, C(), C(), C()}, qv);
  }
  // X = U(S - (q-1)), Y = SU
  static H1Elem X(std::optional<R> qv = std::nullopt) { return U(qv) * (S(qv) - central(C::q() - C(R(1)), qv)); }
  static H1Elem Y(std::optional<R> qv = std::nullopt) { return S(qv) * U(qv); }

  const std::array<C, 4>& coeffs() const { return c_; }
  const std::optional<R>& q_value() const { return qv_; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  H1Elem operator+(const H1Elem& o) const {
    check(o);
    H1Elem r = *this;
    for (int i = 0; i < 4; ++i) r.c_[i] += o.c_[i];
    return r;
  }
  H1Elem operator-(const H1Elem& o) const {
    check(o);
    H1Elem r = *this;
    for (int i = 0; i < 4; ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  H1Elem operator*(const H1Elem& o) const {
    check(o);
    const auto& tab = table();
    H1Elem r(qv_);
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (o.c_[j].is_zero()) continue;
        C ab = c_[i] * o.c_[j];
        for (int k = 0; k < 4; ++k)
          if (!tab[i][j][k].is_zero()) r.c_[k] += ab * tab[i][j][k];
      }
    }
    r.normalize();
    return r;
  }
  H1Elem& operator*=(const H1Elem& o) { return *this = *this * o; }
  H1Elem scaled(const C& a) const {
    if (!a.is_symmetric()) fail(ErrorKind::NotInvariant, "scalar must be central");
    H1Elem r = *this;
    for (auto& x : r.c_) x = x * a;
    r.normalize();
    return r;
  }
  H1Elem pow(unsigned k) const {
    H1Elem r = one(qv_), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }
  bool operator==(const H1Elem& o) const { return qv_ == o.qv_ && c_ == o.c_; }
  bool operator!=(const H1Elem& o) const { return !(*this == o); }

  static const char* basis_name(int i) {
    static const char* names[] = {"1", "S", "U", "SU"};
    return names[i];
  }
  std::string str() const {
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_steinberg(c_[i]).str(steinberg_names()) + ")*" + basis_name(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const H1Elem& o) const {
    if (!(qv_ == o.qv_)) fail(ErrorKind::TagMismatch, "H1 elements with different coefficient rings");
  }
  void normalize() {
    if (!qv_) return;
    for (auto& x : c_) x = x.subst_q(*qv_);
  }
  // tab[i][j] = coordinates of basis_i * basis_j
  static const std::array<std::array<std::array<C, 4>, 4>, 4>& table() {
    static const auto tab = [] {
      std::array<std::array<std::array<C, 4>, 4>, 4> t{};
      const C one(R(1)), q = C::q(), z1 = C::z1(), z2 = C::z2(), qm1 = C::q() - C(R(1));
      for (int i = 0; i < 4; ++i) {
        t[0][i][i] = one;
        t[i][0][i] = one;
      }
      t[S_][S_] = {q, qm1, C(), C()};
      t[S_][U_] = {C(), C(), C(), one};
      t[S_][SU_] = {C(), C(), q, qm1};
      t[U_][S_] = {z1, C(), qm1, -one};
      t[U_][U_] = {z2, C(), C(), C()};
      t[U_][SU_] = {qm1 * z2, -z2, z1, C()};
      t[SU_][S_] = {C(), z1, -q, C()};
      t[SU_][U_] = {C(), z2, C(), C()};
      t[SU_][SU_] = {-(q * z2), C(), C(), z1};
      return t;
    }();
    return tab;
  }

  std::optional<R> qv_;
  std::array<C, 4> c_{};
};

template <class R>
bool is_central(const H1Elem<R>& h) {
  auto qv = h.q_value();
  return h * H1Elem<R>::S(qv) == H1Elem<R>::S(qv) * h && h * H1Elem<R>::U(qv) == H1Elem<R>::U(qv) * h;
}

template <class R>
std::array<ThetaElem<R>, 4> center_decompose(const H1Elem<R>& h) {
  return h.coeffs();
}

// A1 -> H1: X -> z1 - SU, Y -> SU.
template <class R>
H1Elem<R> h1_from_theta(const ThetaElem<R>& f, std::optional<R> qv = std::nullopt) {
  auto [alpha, beta] = detail::split_1Y(f);
  return H1Elem<R>::from_coeffs({alpha, ThetaElem<R>(), ThetaElem<R>(), beta}, qv);
}

// Bernstein isomorphism on H1: an element alpha + beta*SU goes to alpha + beta*Y.
template <class R>
ThetaElem<R> bernstein_iso(const H1Elem<R>& h) {
  const auto& c = h.coeffs();
  if (!c[1].is_zero() || !c[2].is_zero()) fail(ErrorKind::NotInSubalgebra, "element has S or U components");
  return c[0] + c[3] * ThetaElem<R>::Y();
}

// H2(q) as 2x2 matrices over its centre, identified with the theta ring by
// a -> a eps1 + s(a) eps2. Coordinates follow the basis
// {eps1, eps2, z2^-1 eps1 U, eps2 U}, i.e. the entries (11, 22, 12, 21).
template <class R>
class H2Elem {
 public:
  using C = ThetaElem<R>;
  enum Basis { E1 = 0, E2 = 1, E1U = 2, E2U = 3 };

  H2Elem() = default;
  explicit H2Elem(std::optional<R> qv) : qv_(std::move(qv)) {}
  static H2Elem from_coeffs(const std::array<C, 4>& c, std::optional<R> qv = std::nullopt) {
    H2Elem h(qv);
    h.c_ = c;
    h.normalize();
    return h;
  }
  static H2Elem basis(int i, std::optional<R> qv = std::nullopt) {
    H2Elem h(qv);
    h.c_[i] = C(R(1));
    return h;
  }
  static H2Elem eps1(std::optional<R> qv = std::nullopt) { return basis(E1, qv); }
  static H2Elem eps2(std::optional<R> qv = std::nullopt) { return basis(E2, qv); }
  static H2Elem one(std::optional<R> qv = std::nullopt) { return eps1(qv) + eps2(qv); }
  static H2Elem central(const C& a, std::optional<R> qv = std::nullopt) {
    return from_coeffs({a, a, C(), C()}, qv);
  }
  // U = eps1 U + eps2 U
  static H2Elem U(std::optional<R> qv = std::nullopt) { return from_coeffs({C(), C(), C::z2(), C(R(1))}, qv); }
  static H2Elem Uinv(std::optional<R> qv = std::nullopt) { return from_coeffs({C(), C(), C(R(1)), C::z2(-1)}, qv); }
  // S = z2^-1 (Y eps1 + X eps2) eps1 U + z2^-1 (X eps1 + Y eps2) eps2 U
  static H2Elem S(std::optional<R> qv = std::nullopt) {
    return from_coeffs({C(), C(), C::Y(), C::mono(R(1), 1, -1)}, qv);
  }
  static H2Elem X(std::optional<R> qv = std::nullopt) { return U(qv) * S(qv); }
  static H2Elem Y(std::optional<R> qv = std::nullopt) { return S(qv) * U(qv); }

  const std::array<C, 4>& coeffs() const { return c_; }
  const std::optional<R>& q_value() const { return qv_; }
  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  H2Elem operator+(const H2Elem& o) const {
    check(o);
    H2Elem r = *this;
    for (int i = 0; i < 4; ++i) r.c_[i] += o.c_[i];
    return r;
  }
  H2Elem operator-(const H2Elem& o) const {
    check(o);
    H2Elem r = *this;
    for (int i = 0; i < 4; ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  // eps_i U = U eps_{3-i} and the centre commutes, so the coordinates multiply
  // like matrix units.
  H2Elem operator*(const H2Elem& o) const {
    check(o);
    const auto &a = c_, &b = o.c_;
    H2Elem r(qv_);
    r.c_[E1] = a[E1] * b[E1] + a[E1U] * b[E2U];
    r.c_[E1U] = a[E1] * b[E1U] + a[E1U] * b[E2];
    r.c_[E2U] = a[E2U] * b[E1] + a[E2] * b[E2U];
    r.c_[E2] = a[E2U] * b[E1U] + a[E2] * b[E2];
    r.normalize();
    return r;
  }
  H2Elem& operator*=(const H2Elem& o) { return *this = *this * o; }
  H2Elem scaled(const C& a) const {
    H2Elem r = *this;
    for (auto& x : r.c_) x = x * a;
    r.normalize();
    return r;
  }
  H2Elem pow(unsigned k) const {
    H2Elem r = one(qv_), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }
  bool operator==(const H2Elem& o) const { return qv_ == o.qv_ && c_ == o.c_; }
  bool operator!=(const H2Elem& o) const { return !(*this == o); }

  static const char* basis_name(int i) {
    static const char* names[] = {"e1", "e2", "z2^-1*e1*U", "e2*U"};
    return names[i];
  }
  std::string str() const {
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].str() + ")*" + basis_name(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const H2Elem& o) const {
    if (!(qv_ == o.qv_)) fail(ErrorKind::TagMismatch, "H2 elements with different coefficient rings");
  }
  void normalize() {
    if (!qv_) return;
    for (auto& x : c_) x = x.subst_q(*qv_);
  }
  std::optional<R> qv_;
  std::array<C, 4> c_{};
};

template <class R>
bool is_central(const H2Elem<R>& h) {
  auto qv = h.q_value();
  for (const auto& g : {H2Elem<R>::S(qv), H2Elem<R>::U(qv), H2Elem<R>::eps1(qv)})
    if (h * g != g * h) return false;
  return true;
}

// theta (x) (eps1 + eps2) -> diag(theta, s(theta))
template <class R>
H2Elem<R> h2_from_theta(const ThetaElem<R>& f, std::optional<R> qv = std::nullopt) {
  return H2Elem<R>::from_coeffs({f, f.swapped(), ThetaElem<R>(), ThetaElem<R>()}, qv);
}

// Components along eps1 and eps2 of an element of A2.
template <class R>
std::pair<ThetaElem<R>, ThetaElem<R>> bernstein_iso(const H2Elem<R>& h) {
  const auto& c = h.coeffs();
  if (!c[2].is_zero() || !c[3].is_zero()) fail(ErrorKind::NotInSubalgebra, "element has off-diagonal components");
  return {c[0], c[1].swapped()};
}

// E(a,b) in the models via X, Y, z2 = U^2.
template <class Elem>
Elem model_e_element(int a, int b, std::optional<typename Elem::C::Map::mapped_type> qv = std::nullopt) {
  using C = typename Elem::C;
  Elem core = a >= b ? Elem::X(qv).pow(static_cast<unsigned>(a - b)) : Elem::Y(qv).pow(static_cast<unsigned>(b - a));
  int k = std::min(a, b);
  return core * Elem::central(C::z2(k), qv);
}

using ModelElem = std::variant<H1Elem<CycloLoc>, H2Elem<CycloLoc>>;

inline std::pair<TorusCharacter, TorusCharacter> default_order(const CharacterOrbit& g) {
  if (!g.regular()) fail(ErrorKind::ValidationError, "order only applies to regular orbits");
  return {g.members[0], g.members[1]};
}

namespace detail {

template <class Elem>
Elem project_with(const ProPElem<CycloLoc>& h, const std::optional<CycloLoc>& qv,
                  const std::function<Elem(const TorusElem&)>& torus_image) {
  const Elem S = Elem::S(qv), U = Elem::U(qv), Ui = Elem::Uinv(qv);
  const Elem S0 = U * S * Ui;
  Elem out(qv);
  for (auto& [w, c] : h.terms()) {
    ReducedWord rw = reduced_word(w);
    Elem img = torus_image(rw.t);
    for (AffGen g : rw.word) img = img * (g == AffGen::S ? S : S0);
    for (int i = 0; i < std::abs(rw.u_power); ++i) img = img * (rw.u_power > 0 ? U : Ui);
    out = out + img.scaled(ThetaElem<CycloLoc>::from_poly(c));
  }
  return out;
}

}  // namespace detail

// Non-regular orbit {lambda}: T_t -> lambda(t), T_s -> S, T_u -> U. The torus
// relation c_s eps = (q0 - 1) eps fixes the quadratic coefficient, so the
// target is H1 with q specialized to q0.
inline H1Elem<CycloLoc> project_nonregular(const ProPElem<CycloLoc>& h, const CharacterOrbit& g) {
  if (g.regular()) fail(ErrorKind::ValidationError, "orbit " + g.str() + " is regular");
  const TorusCharacter chi = g.representative();
  if (chi.q0() != h.q0()) fail(ErrorKind::TagMismatch, "orbit and element for different q0");
  int n = chi.n;
  std::optional<CycloLoc> qv = CycloLoc::integer(h.q0(), n);
  return detail::project_with<H1Elem<CycloLoc>>(h, qv, [&](const TorusElem& t) {
    return H1Elem<CycloLoc>::central(ThetaElem<CycloLoc>(chi.value(t)), qv);
  });
}

// Regular orbit with order (lambda, mu): eps1 -> eps_lambda, eps2 -> eps_mu.
inline H2Elem<CycloLoc> project_regular(const ProPElem<CycloLoc>& h, const CharacterOrbit& g,
                                        const std::optional<std::pair<TorusCharacter, TorusCharacter>>& order) {
  if (!g.regular()) fail(ErrorKind::ValidationError, "orbit " + g.str() + " is not regular");
  if (!order) fail(ErrorKind::MissingOrder, "regular orbit " + g.str() + " needs an order (lambda, mu)");
  auto [lam, mu] = *order;
  if (lam.swapped() != mu || orbit_of(lam) != g) fail(ErrorKind::ValidationError, "order does not match orbit");
  if (lam.q0() != h.q0()) fail(ErrorKind::TagMismatch, "orbit and element for different q0");
  std::optional<CycloLoc> qv;
  using C = ThetaElem<CycloLoc>;
  return detail::project_with<H2Elem<CycloLoc>>(h, qv, [&](const TorusElem& t) {
    return H2Elem<CycloLoc>::from_coeffs({C(lam.value(t)), C(mu.value(t)), C(), C()});
  });
}

inline ModelElem project_component(const ProPElem<CycloLoc>& h, const CharacterOrbit& g,
                                   const std::optional<std::pair<TorusCharacter, TorusCharacter>>& order = std::nullopt) {
  if (g.regular()) return project_regular(h, g, order);
  return project_nonregular(h, g);
}

}  // namespace genhecke
