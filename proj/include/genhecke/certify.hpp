#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "genhecke/antispherical.hpp"
#include "genhecke/hecke.hpp"
#include "genhecke/models.hpp"
#include "genhecke/satake.hpp"

namespace genhecke {

struct CertCheck {
  std::string name;
  bool ok = false;
  std::string detail;
  double millis = 0;
};

namespace detail {

class CertRng {
 public:
  explicit CertRng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  ThetaElem<Integer> theta(int terms, int max_m, int max_z, int max_q) {
    ThetaElem<Integer> a;
    for (int i = 0; i < terms; ++i)
      a.add_term({uniform(-max_m, max_m), uniform(-max_z, max_z), uniform(0, max_q)}, Integer(uniform(-4, 4)));
    return a;
  }
  ThetaElem<Integer> symmetric() {
    auto a = theta(2, 2, 1, 1);
    return a + a.swapped();
  }
  H1Elem<Integer> h1() { return H1Elem<Integer>::from_coeffs({symmetric(), symmetric(), symmetric(), symmetric()}); }
  H2Elem<Integer> h2() {
    return H2Elem<Integer>::from_coeffs({theta(2, 2, 1, 1), theta(2, 2, 1, 1), theta(2, 2, 1, 1), theta(2, 2, 1, 1)});
  }

 private:
  std::mt19937_64 g_;
};

// t * (alternating word of length <= max_len) * u^k
inline std::vector<ExtendedWeylElem> short_weyl_elements(int q0, int max_len) {
  std::vector<std::vector<AffGen>> words{{}};
  for (AffGen first : {AffGen::S0, AffGen::S})
    for (int len = 1; len <= max_len; ++len) {
      std::vector<AffGen> w;
      for (int i = 0; i < len; ++i) w.push_back((i % 2 == 0) == (first == AffGen::S0) ? AffGen::S0 : AffGen::S);
      words.push_back(w);
    }
  std::vector<ExtendedWeylElem> out;
  for (const auto& t : torus_elements(q0))
    for (const auto& w : words)
      for (int k = -1; k <= 1; ++k) {
        ReducedWord r;
        r.t = t;
        r.word = w;
        r.u_power = k;
        out.push_back(word_product(q0, r));
      }
  return out;
}

inline CertCheck timed(const std::string& name, const std::function<std::string()>& body) {
  CertCheck c;
  c.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.detail = body();
    c.ok = c.detail.empty();
    if (c.ok) c.detail = "ok";
  } catch (const std::exception& e) {
    c.detail = e.what();
  }
  c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace detail

// Identity suite behind the `certify` command. An empty detail string from a
// body means success.
inline std::vector<CertCheck> run_certification(std::uint64_t seed = 20240611) {
  using Th = ThetaElem<Integer>;
  using Op = OpMatrix2<Integer>;
  std::vector<CertCheck> out;

  out.push_back(detail::timed("vigneras_square", [] {
    Op v = vigneras_operator();
    return v * v == Op::scalar(ModuleBasis::Eps, Th::q()) ? "" : std::string("V_s^2 != q");
  }));

  out.push_back(detail::timed("demazure_quadratic", [] {
    Op d = demazure_operator(DemazureKind::DsQ);
    Op rhs = d.scaled(Th(Integer(1)) - Th::q()) + Op::scalar(ModuleBasis::OneY, Th::q());
    return d * d == rhs ? "" : std::string("D_s(q)^2 != (1-q) D_s(q) + q");
  }));

  out.push_back(detail::timed("rep_homomorphism", [seed] {
    detail::CertRng rng(seed);
    for (int t = 0; t < 50; ++t) {
      auto a = rng.h1(), b = rng.h1();
      if (rep1(a * b) != rep1(a) * rep1(b)) return std::string("rep1 fails on ") + (a * b).str();
      auto x = rng.h2(), y = rng.h2();
      if (rep2(x * y) != rep2(x) * rep2(y)) return std::string("rep2 fails on ") + (x * y).str();
    }
    return std::string();
  }));

  out.push_back(detail::timed("quadratic_relations", [] {
    using P = ProPElem<Integer>;
    for (int q0 : {2, 3}) {
      P ts = P::T_s(q0), ts0 = P::T_s0(q0), c = P::c_s(q0);
      P one_q = P::one(q0).scaled(GenPoly<Integer>::q());
      if (ts * ts != one_q + c * ts) return "T_s^2 at q0=" + std::to_string(q0);
      if (ts0 * ts0 != one_q + c * ts0) return "T_s0^2 at q0=" + std::to_string(q0);
    }
    return std::string();
  }));

  out.push_back(detail::timed("braid_exhaustive", [] {
    using P = ProPElem<Integer>;
    for (int q0 : {2, 3}) {
      auto elems = detail::short_weyl_elements(q0, 3);
      for (const auto& a : elems)
        for (const auto& b : elems) {
          auto ab = a * b;
          if (weyl_length(ab) != weyl_length(a) + weyl_length(b)) continue;
          if (P::basis(a) * P::basis(b) != P::basis(ab)) return "T_a T_b != T_ab for " + a.str() + ", " + b.str();
        }
    }
    return std::string();
  }));

  out.push_back(detail::timed("satake_oracle_matrix", [] {
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int b1 = 0; b1 <= a1; ++b1)
        for (int a2 = 0; a2 <= 2; ++a2)
          for (int b2 = 0; b2 <= a2; ++b2) {
            Coweight lam{a1, b1}, mu{a2, b2};
            auto sc = structure_constants(lam, mu);
            int total = a1 + b1 + a2 + b2;
            for (int n1 = (total + 1) / 2; n1 <= std::min(total, 4); ++n1) {
              Coweight nu{n1, total - n1};
              auto it = sc.find(nu);
              GenPoly<Integer> n = it == sc.end() ? GenPoly<Integer>() : it->second;
              if (n.degree() > 2) return "degree bound exceeded at " + coweight_str(nu);
              for (int p : {2, 3, 5}) {
                Integer v = n.eval(Integer(p), Integer(1), [](const Integer& c) { return c; });
                if (v != hall_oracle(lam, mu, nu, p))
                  return "N" + coweight_str(lam) + coweight_str(mu) + coweight_str(nu) + " at " + std::to_string(p);
              }
            }
          }
    return std::string();
  }));

  out.push_back(detail::timed("central_diagram", [] {
    for (int a = 0; a <= 4; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = 0; c + a + std::abs(b) <= 4; ++c) {
          SphericalElem h = SphericalElem::monomial(Integer(1), {a, b, c});
          auto z = central_elements(h);
          if (!is_central(z)) return "not central: " + h.str(spherical_names());
          if (bernstein_iso(z) != satake_iso(h)) return "diagram fails on " + h.str(spherical_names());
        }
    return std::string();
  }));

  out.push_back(detail::timed("herzig_q0_3", [] {
    auto r = herzig_compare(3);
    for (const auto& row : r.rows)
      if (!row.ok) return row.label + ": " + row.lhs + " vs " + row.rhs;
    return std::string();
  }));
  return out;
}

}  // namespace genhecke
