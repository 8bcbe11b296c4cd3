#pragma once

#include <array>
#include <string>

#include "genhecke/models.hpp"

namespace genhecke {

enum class ModuleBasis { OneY, Eps };

inline const char* basis_label(ModuleBasis b) { return b == ModuleBasis::OneY ? "{1,Y}" : "{eps1,eps2}"; }

// 2x2 matrix with theta-ring entries acting on the antispherical module.
template <class R>
struct OpMatrix2 {
  using C = ThetaElem<R>;
  ModuleBasis basis = ModuleBasis::OneY;
  std::array<std::array<C, 2>, 2> m{};

  static OpMatrix2 make(ModuleBasis b, C a11, C a12, C a21, C a22) {
    OpMatrix2 r;
    r.basis = b;
    r.m = {{{a11, a12}, {a21, a22}}};
    return r;
  }
  static OpMatrix2 identity(ModuleBasis b) { return make(b, C(R(1)), C(), C(), C(R(1))); }
  static OpMatrix2 scalar(ModuleBasis b, const C& a) { return make(b, a, C(), C(), a); }

  OpMatrix2 operator*(const OpMatrix2& o) const {
    check(o);
    OpMatrix2 r;
    r.basis = basis;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
  }
  OpMatrix2 operator+(const OpMatrix2& o) const {
    check(o);
    OpMatrix2 r = *this;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] += o.m[i][j];
    return r;
  }
  OpMatrix2 operator-(const OpMatrix2& o) const {
    check(o);
    OpMatrix2 r = *this;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] -= o.m[i][j];
    return r;
  }
  OpMatrix2 scaled(const C& a) const {
    OpMatrix2 r = *this;
    for (auto& row : r.m)
      for (auto& x : row) x = x * a;
    return r;
  }
  OpMatrix2 subst_q(const R& v) const {
    OpMatrix2 r = *this;
    for (auto& row : r.m)
      for (auto& x : row) x = x.subst_q(v);
    return r;
  }
  C det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  C trace() const { return m[0][0] + m[1][1]; }
  bool is_zero() const {
    for (auto& row : m)
      for (auto& x : row)
        if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const OpMatrix2& o) const { return basis == o.basis && m == o.m; }
  bool operator!=(const OpMatrix2& o) const { return !(*this == o); }
  std::string str() const {
    return "[[" + m[0][0].str() + ", " + m[0][1].str() + "], [" + m[1][0].str() + ", " + m[1][1].str() + "]]";
  }

 private:
  void check(const OpMatrix2& o) const {
    if (basis != o.basis) fail(ErrorKind::TagMismatch, "matrices in different module bases");
  }
};

// V_s on {eps1, eps2}.
template <class R = Integer>
OpMatrix2<R> vigneras_operator() {
  using C = ThetaElem<R>;
  return OpMatrix2<R>::make(ModuleBasis::Eps, C(), C::Y(), C::mono(R(1), 1, -1), C());
}

enum class DemazureKind { Ds, DsPrime, DsQ };

// Demazure operators on {1, Y}.
template <class R = Integer>
OpMatrix2<R> demazure_operator(DemazureKind k) {
  using C = ThetaElem<R>;
  const C one(R(1)), z1 = C::z1(), q = C::q();
  switch (k) {
    case DemazureKind::Ds: return OpMatrix2<R>::make(ModuleBasis::OneY, C(), C(), C(), one);
    case DemazureKind::DsPrime: return OpMatrix2<R>::make(ModuleBasis::OneY, one, z1, C(), C());
    case DemazureKind::DsQ: return OpMatrix2<R>::make(ModuleBasis::OneY, -q, -(q * z1), C(), one);
  }
  fail(ErrorKind::ValidationError, "unknown Demazure operator");
}

template <class R = Integer>
OpMatrix2<R> rep1_S() {
  using C = ThetaElem<R>;
  return OpMatrix2<R>::make(ModuleBasis::OneY, C::q(), C::q() * C::z1(), C(), C(R(-1)));
}

template <class R = Integer>
OpMatrix2<R> rep1_U() {
  using C = ThetaElem<R>;
  const C z1 = C::z1();
  return OpMatrix2<R>::make(ModuleBasis::OneY, z1, z1 * z1 - C::z2(), C(R(-1)), -z1);
}

// Multiplication by f on A1 in the basis {1, Y}.
template <class R>
OpMatrix2<R> multiplication_matrix_1Y(const ThetaElem<R>& f) {
  auto [a0, b0] = detail::split_1Y(f);
  auto [a1, b1] = detail::split_1Y(f * ThetaElem<R>::Y());
  return OpMatrix2<R>::make(ModuleBasis::OneY, a0, a1, b0, b1);
}

// Multiplication by f on A2 in the basis {eps1, eps2}.
template <class R>
OpMatrix2<R> multiplication_matrix_eps(const ThetaElem<R>& f) {
  return OpMatrix2<R>::make(ModuleBasis::Eps, f, ThetaElem<R>(), ThetaElem<R>(), f.swapped());
}

// Matrix of the W0 involution: on {1, Y} it sends Y to X = z1 - Y, on {eps1, eps2} it swaps.
template <class R>
OpMatrix2<R> basis_involution(ModuleBasis b) {
  using C = ThetaElem<R>;
  if (b == ModuleBasis::OneY) return OpMatrix2<R>::make(b, C(R(1)), C::z1(), C(), C(R(-1)));
  return OpMatrix2<R>::make(b, C(), C(R(1)), C(R(1)), C());
}

template <class R>
OpMatrix2<R> rep1(const H1Elem<R>& h) {
  const auto& c = h.coeffs();
  const auto S = rep1_S<R>(), U = rep1_U<R>();
  const auto I = OpMatrix2<R>::identity(ModuleBasis::OneY);
  auto r = I.scaled(c[0]) + S.scaled(c[1]) + U.scaled(c[2]) + (S * U).scaled(c[3]);
  if (h.q_value()) r = r.subst_q(*h.q_value());
  return r;
}

// eps1 -> E11, eps2 -> E22, U -> [[0, z2], [1, 0]], S -> V_s.
template <class R>
OpMatrix2<R> rep2(const H2Elem<R>& h) {
  using C = ThetaElem<R>;
  const auto& c = h.coeffs();
  const auto E11 = OpMatrix2<R>::make(ModuleBasis::Eps, C(R(1)), C(), C(), C());
  const auto E22 = OpMatrix2<R>::make(ModuleBasis::Eps, C(), C(), C(), C(R(1)));
  const auto U = OpMatrix2<R>::make(ModuleBasis::Eps, C(), C::z2(), C(R(1)), C());
  // central a acts as a on the free theta-module of rank 2
  auto r = E11.scaled(c[0]) + E22.scaled(c[1]) + (E11 * U).scaled(c[2] * C::z2(-1)) + (E22 * U).scaled(c[3]);
  if (h.q_value()) r = r.subst_q(*h.q_value());
  return r;
}

// Faithfulness obstruction: coefficients (alpha, beta, gamma, delta) of
// 1, S, U, SU with rep1 = 0. The two rows with unit pivots fix delta = gamma
// and alpha = beta; the determinant of the remaining 2x2 system in
// (beta, gamma) is returned.
template <class R = Integer>
ThetaElem<R> obstruction_determinant() {
  using C = ThetaElem<R>;
  const auto S = rep1_S<R>(), U = rep1_U<R>(), SU = S * U;
  const auto I = OpMatrix2<R>::identity(ModuleBasis::OneY);
  const std::array<OpMatrix2<R>, 4> cols{I, S, U, SU};
  // rows ordered (11, 12, 21, 22)
  std::array<std::array<C, 4>, 4> a;
  for (int j = 0; j < 4; ++j) {
    a[0][j] = cols[j].m[0][0];
    a[1][j] = cols[j].m[0][1];
    a[2][j] = cols[j].m[1][0];
    a[3][j] = cols[j].m[1][1];
  }
  // Row 21 is -gamma + delta, row 22 is alpha - beta + z1(delta - gamma).
  const C one(R(1));
  if (!(a[2][0].is_zero() && a[2][1].is_zero() && a[2][2] == -one && a[2][3] == one))
    fail(ErrorKind::RelationViolation, "unexpected shape of row 21");
  if (!(a[3][0] == one && a[3][1] == -one && a[3][2] == -a[3][3]))
    fail(ErrorKind::RelationViolation, "unexpected shape of row 22");
  // substitute delta = gamma, alpha = beta
  C r11 = a[0][0] + a[0][1], r12 = a[0][2] + a[0][3];
  C r21 = a[1][0] + a[1][1], r22 = a[1][2] + a[1][3];
  return r11 * r22 - r12 * r21;
}

// Full 4x4 determinant of the same system, rows (11, 12, 21, 22), columns (1, S, U, SU).
template <class R = Integer>
ThetaElem<R> obstruction_full_determinant() {
  using C = ThetaElem<R>;
  const auto S = rep1_S<R>(), U = rep1_U<R>(), SU = S * U;
  const auto I = OpMatrix2<R>::identity(ModuleBasis::OneY);
  const std::array<OpMatrix2<R>, 4> cols{I, S, U, SU};
  std::array<std::array<C, 4>, 4> a;
  for (int j = 0; j < 4; ++j) {
    a[0][j] = cols[j].m[0][0];
    a[1][j] = cols[j].m[0][1];
    a[2][j] = cols[j].m[1][0];
    a[3][j] = cols[j].m[1][1];
  }
  // Laplace expansion along the first row.
  auto det3 = [&](int skip) {
    std::array<int, 3> c{};
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != skip) c[k++] = j;
    return a[1][c[0]] * (a[2][c[1]] * a[3][c[2]] - a[2][c[2]] * a[3][c[1]]) -
           a[1][c[1]] * (a[2][c[0]] * a[3][c[2]] - a[2][c[2]] * a[3][c[0]]) +
           a[1][c[2]] * (a[2][c[0]] * a[3][c[1]] - a[2][c[1]] * a[3][c[0]]);
  };
  C d;
  for (int j = 0; j < 4; ++j) {
    C t = a[0][j] * det3(j);
    d = (j % 2 == 0) ? d + t : d - t;
  }
  return d;
}

}  // namespace genhecke
