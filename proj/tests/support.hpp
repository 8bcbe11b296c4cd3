#pragma once

#include <random>

#include "genhecke/hecke.hpp"
#include "genhecke/models.hpp"
#include "genhecke/theta.hpp"

namespace gh_test {

using namespace genhecke;

inline std::mt19937_64& rng() {
  static thread_local std::mt19937_64 g(20240611);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

template <class R = Integer>
ThetaElem<R> random_theta(int terms = 4, int max_m = 3, int max_z = 2, int max_q = 2, int max_c = 5) {
  ThetaElem<R> a;
  for (int i = 0; i < terms; ++i)
    a.add_term({uniform(-max_m, max_m), uniform(-max_z, max_z), uniform(0, max_q)}, R(uniform(-max_c, max_c)));
  return a;
}

template <class R = Integer>
ThetaElem<R> random_symmetric(int terms = 3) {
  ThetaElem<R> a = random_theta<R>(terms, 2, 1, 1, 4);
  return a + a.swapped();
}

template <class R = Integer>
H1Elem<R> random_h1(int terms = 2) {
  return H1Elem<R>::from_coeffs(
      {random_symmetric<R>(terms), random_symmetric<R>(terms), random_symmetric<R>(terms), random_symmetric<R>(terms)});
}

template <class R = Integer>
H2Elem<R> random_h2(int terms = 2) {
  return H2Elem<R>::from_coeffs(
      {random_theta<R>(terms, 2, 1, 1, 4), random_theta<R>(terms, 2, 1, 1, 4), random_theta<R>(terms, 2, 1, 1, 4),
       random_theta<R>(terms, 2, 1, 1, 4)});
}

inline ExtendedWeylElem random_weyl(int q0, int max_l = 2) {
  int n = q0 - 1;
  return ExtendedWeylElem{TorusElem{n, uniform(0, n - 1), uniform(0, n - 1)}, uniform(-max_l, max_l),
                          uniform(-max_l, max_l), uniform(0, 1) == 1};
}

template <class R>
ProPElem<R> random_prop(int q0, int terms = 2, int max_l = 1) {
  ProPElem<R> h(q0);
  for (int i = 0; i < terms; ++i) {
    GenPoly<R> c;
    c.add_term(uniform(0, 1), R(uniform(-3, 3)));
    c.add_term(0, R(uniform(-3, 3)));
    h.add_term(random_weyl(q0, max_l), c);
  }
  return h;
}

inline Rational rational_eval(const Integer& c) { return Rational(c); }

}  // namespace gh_test
