#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <set>

#include "genhecke/cyclotomic.hpp"
#include "genhecke/finite_field.hpp"
#include "genhecke/scalar.hpp"
#include "genhecke/theta.hpp"
#include "support.hpp"

using namespace genhecke;
using gh_test::random_theta;
using gh_test::uniform;

namespace {

using Th = ThetaElem<Integer>;

CycloLoc random_cyclo(int n, int max_k = 2) {
  int phi = static_cast<int>(detail::cyclotomic_poly(n).size()) - 1;
  std::vector<Integer> num(phi);
  for (auto& c : num) c = uniform(-6, 6);
  return CycloLoc::from_parts(n, num, uniform(0, max_k));
}

std::complex<double> zeta_c(int n, long j) {
  double a = 2.0 * M_PI * static_cast<double>(j) / n;
  return {std::cos(a), std::sin(a)};
}

}  // namespace

TEST(CycloLoc, InverseOfLocalizedPrime) {
  CycloLoc half = CycloLoc::from_parts(2, {Integer(1)}, 1);
  EXPECT_EQ(half * CycloLoc::integer(2, 2), CycloLoc::integer(1, 2));
  EXPECT_EQ(CycloLoc::integer(2, 2).inverse(), half);
}

TEST(CycloLoc, ZetaTwoIsMinusOne) {
  EXPECT_EQ(CycloLoc::zeta_pow(2, 1), CycloLoc::integer(-1, 2));
  EXPECT_EQ(CycloLoc::zeta_pow(2, 1).str(), "-1");
}

TEST(CycloLoc, ZetaPowersCycle) {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12}) {
    EXPECT_EQ(CycloLoc::zeta_pow(n, n), CycloLoc::integer(1, n));
    EXPECT_EQ(CycloLoc::zeta_pow(n, -1) * CycloLoc::zeta_pow(n, 1), CycloLoc::integer(1, n));
    CycloLoc s = CycloLoc::integer(0, n);
    for (int j = 0; j < n; ++j) s += CycloLoc::zeta_pow(n, j);
    EXPECT_EQ(s, CycloLoc::integer(n == 1 ? 1 : 0, n)) << n;
  }
}

TEST(CycloLoc, Units) {
  EXPECT_THROW(CycloLoc::integer(3, 2).inverse(), Error);
  try {
    CycloLoc::integer(3, 2).inverse();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAUnit);
  }
  // 1 + i has norm 2 and is a unit once 4 is inverted
  CycloLoc a = CycloLoc::integer(1, 4) + CycloLoc::zeta_pow(4, 1);
  EXPECT_TRUE(a.is_unit());
  EXPECT_EQ(a * a.inverse(), CycloLoc::integer(1, 4));
  CycloLoc b = CycloLoc::integer(1, 6) - CycloLoc::zeta_pow(6, 1) * CycloLoc::integer(2, 6);
  EXPECT_EQ(b.is_unit(), b.norm() != 0 && [&] {
    Integer num = boost::multiprecision::numerator(b.norm());
    if (num < 0) num = -num;
    for (int p : {2, 3}) while (num % p == 0) num /= p;
    return num == 1;
  }());
}

TEST(CycloLoc, ParameterMismatch) {
  EXPECT_THROW(CycloLoc::zeta_pow(3, 1) + CycloLoc::zeta_pow(4, 1), Error);
  // unbound integers adopt the other operand's n
  EXPECT_EQ(CycloLoc(Integer(2)) * CycloLoc::zeta_pow(4, 1), CycloLoc::zeta_pow(4, 1) * CycloLoc::integer(2, 4));
}

TEST(CycloLoc, ComplexEmbeddingAgrees) {
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 15, 16}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloLoc a = random_cyclo(n), b = random_cyclo(n);
      auto ca = a.to_complex(), cb = b.to_complex();
      EXPECT_LT(std::abs((a * b).to_complex() - ca * cb), 1e-9);
      EXPECT_LT(std::abs((a + b).to_complex() - (ca + cb)), 1e-9);
      if (a.is_unit()) {
        EXPECT_LT(std::abs(a.inverse().to_complex() * ca - 1.0), 1e-9);
      }
    }
    EXPECT_LT(std::abs(CycloLoc::zeta_pow(n, 1).to_complex() - zeta_c(n, 1)), 1e-12);
  }
}

TEST(CycloLoc, ParseRoundTrip) {
  for (int n : {2, 4, 6, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloLoc a = random_cyclo(n);
      EXPECT_EQ(CycloLoc::parse(a.str(), n), a) << a.str();
    }
  }
  EXPECT_EQ(CycloLoc::parse("[1-2*zeta]/4", 4).str(), "[1-2*zeta]/4");
}

TEST(CycloLoc, ReductionIsRingMap) {
  const GaloisField& f = GaloisField::get(9);
  for (int trial = 0; trial < 30; ++trial) {
    CycloLoc a = random_cyclo(8), b = random_cyclo(8);
    EXPECT_EQ((a * b).reduce(f), a.reduce(f) * b.reduce(f));
    EXPECT_EQ((a + b).reduce(f), a.reduce(f) + b.reduce(f));
  }
  EXPECT_EQ(CycloLoc::zeta_pow(8, 1).reduce(f), f.generator());
}

namespace {

// Irreducibility of the field modulus by trial division over F_p.
bool irreducible(const std::vector<int>& poly, int p) {
  int d = static_cast<int>(poly.size()) - 1;
  auto mod = [&](std::vector<int> a, const std::vector<int>& b) {
    int db = static_cast<int>(b.size()) - 1;
    int lead_inv = 1;
    while (lead_inv * b[db] % p != 1) ++lead_inv;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      int c = a[i] * lead_inv % p;
      if (!c) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    for (int i = 0; i < db; ++i)
      if (a[i]) return false;
    return true;
  };
  for (int dd = 1; dd <= d / 2; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> b(dd + 1);
      int c = code;
      for (int i = 0; i < dd; ++i) b[i] = c % p, c /= p;
      b[dd] = 1;
      if (mod(poly, b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(FiniteField, PrimeFieldArithmetic) {
  const GaloisField& f = GaloisField::get(3);
  EXPECT_EQ(f.from_integer(2) + f.from_integer(2), f.one());
  EXPECT_EQ(f.parse("2").str(), "2");
}

TEST(FiniteField, AllTablesAreFields) {
  for (int size : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64}) {
    const GaloisField& f = GaloisField::get(size);
    ASSERT_EQ(f.size(), size);
    if (f.degree() > 1) EXPECT_TRUE(irreducible(f.modulus(), f.p())) << size;
    // generator is primitive
    std::set<int> seen;
    for (int e = 0; e < size - 1; ++e) seen.insert(f.gen_pow(e).index());
    EXPECT_EQ(static_cast<int>(seen.size()), size - 1) << size;
    for (const auto& a : f.elements()) {
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), f.one());
      EXPECT_EQ(a + (-a), f.zero());
      EXPECT_EQ(f.parse(a.str()), a) << a.str();
    }
    for (int t = 0; t < 50; ++t) {
      auto a = f.element(uniform(0, size - 1)), b = f.element(uniform(0, size - 1)), c = f.element(uniform(0, size - 1));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
    }
  }
}

TEST(FiniteField, TooLarge) {
  try {
    GaloisField::get(2, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldTooLarge);
  }
  EXPECT_EQ(GaloisField::get(3, 2).size(), 9);
}

TEST(CoefficientScalar, VariantMismatch) {
  CoefficientScalar a(Integer(2)), b(GaloisField::get(3).one());
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VariantMismatch);
  }
  EXPECT_EQ((CoefficientScalar(GaloisField::get(3).from_integer(2)) * CoefficientScalar(GaloisField::get(3).from_integer(2))).str(), "1");
  EXPECT_THROW(CoefficientScalar(Integer(2)).inverse(), Error);
  EXPECT_EQ(CoefficientScalar(Integer(-1)).inverse().str(), "-1");
}

TEST(GenPoly, Printing) {
  GenPoly<Integer> p = GenPoly<Integer>::q() + GenPoly<Integer>(Integer(1));
  EXPECT_EQ(p.str(), "q+1");
  EXPECT_EQ((p * p).str(), "q^2+2*q+1");
  EXPECT_EQ((-p).str(), "-q-1");
  EXPECT_EQ(GenPoly<Integer>().str(), "0");
}

TEST(Theta, Products) {
  EXPECT_EQ(Th::X() * Th::Y(), Th::q() * Th::z2());
  EXPECT_EQ(Th::X(2) * Th::Y(), Th::q() * Th::z2() * Th::X());
  Th a = random_theta();
  EXPECT_EQ(Th(Integer(1)) * a, a);
  EXPECT_EQ((Th::X() * Th::Y()).str(), "q*z2");
}

TEST(Theta, RingAxiomsRandom) {
  for (int t = 0; t < 200; ++t) {
    Th a = random_theta(), b = random_theta(), c = random_theta();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Theta, Swap) {
  EXPECT_EQ(theta_swap(Th::X()), Th::Y());
  EXPECT_EQ(theta_swap(Th::z1()), Th::z1());
  EXPECT_EQ(theta_swap(parse_theta("X^2+3*Y")), parse_theta("Y^2+3*X"));
  for (int t = 0; t < 100; ++t) {
    Th a = random_theta(), b = random_theta();
    EXPECT_EQ(theta_swap(theta_swap(a)), a);
    EXPECT_EQ(theta_swap(a * b), theta_swap(a) * theta_swap(b));
  }
}

TEST(Theta, EvaluationOnFiber) {
  auto conv = [](const Integer& c) { return Rational(c); };
  std::uniform_int_distribution<int> d(1, 9);
  for (int t = 0; t < 50; ++t) {
    Th a = random_theta(), b = random_theta();
    Rational q(d(gh_test::rng()), d(gh_test::rng())), x(d(gh_test::rng()), d(gh_test::rng())),
        z(d(gh_test::rng()), d(gh_test::rng()));
    if (uniform(0, 1)) x = -x;
    Rational y = q * z / x;
    Rational va = a.evaluate(q, x, y, z, conv), vb = b.evaluate(q, x, y, z, conv);
    EXPECT_EQ((a * b).evaluate(q, x, y, z, conv), va * vb);
    EXPECT_EQ((a + b).evaluate(q, x, y, z, conv), va + vb);
  }
}

TEST(Theta, SpecializationExamples) {
  auto conv = [](const Integer& c) { return c; };
  EXPECT_EQ(theta_evaluate(Th::X() + Th::Y(), Integer(0), Integer(2), Integer(0), Integer(5), conv), 2);
  EXPECT_EQ(theta_evaluate(Th::X() * Th::Y(), Integer(0), Integer(3), Integer(0), Integer(7), conv), 0);
  try {
    theta_evaluate(Th::X(), Integer(0), Integer(1), Integer(1), Integer(1), conv);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointOffFiber);
  }
}

TEST(Theta, FiberSpecializationIsRingMap) {
  for (int c : {0, 1, 3}) {
    for (int t = 0; t < 50; ++t) {
      Th a = random_theta(), b = random_theta();
      auto fa = theta_specialize(a, Integer(c)), fb = theta_specialize(b, Integer(c));
      EXPECT_EQ(theta_specialize(a * b, Integer(c)), fa * fb);
      EXPECT_EQ(theta_specialize(a + b, Integer(c)), fa + fb);
    }
  }
  // q = 0 kills mixed monomials
  EXPECT_TRUE(theta_specialize(Th::X() * Th::Y(), Integer(0)).is_zero());
}

TEST(Theta, ParseAndPrint) {
  Th a = parse_theta("q^2*z2^-1 + 3*X^2");
  EXPECT_EQ(a, Th::q(2) * Th::z2(-1) + Th::X(2).scaled(Integer(3)));
  EXPECT_EQ(parse_theta("X*Y"), Th::q() * Th::z2());
  EXPECT_EQ(parse_theta("z1^2"), Th::z1() * Th::z1());
  EXPECT_EQ(parse_theta("-(X-2*Y)^2"), -((Th::X() - Th::Y().scaled(Integer(2))).pow(2)));
  for (int t = 0; t < 100; ++t) {
    Th r = random_theta();
    EXPECT_EQ(parse_theta(r.str()), r) << r.str();
  }
  for (const char* bad : {"X^-1", "q^", "2**X", "w", "(X+Y", "q^-2"}) {
    try {
      parse_theta(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Theta, CyclotomicCoefficients) {
  auto a = parse_theta_cyclo("[1+zeta]/2*X + z2", 2);
  EXPECT_EQ(a.coeff({1, 0, 0}), CycloLoc::integer(0, 2));
  auto b = parse_theta_cyclo("[1+2*zeta]/3*X + z2", 3);
  EXPECT_EQ(parse_theta_cyclo(b.str(), 3), b);
}

TEST(Theta, SteinbergCoordinates) {
  for (int t = 0; t < 50; ++t) {
    Th a = gh_test::random_symmetric();
    EXPECT_EQ(from_steinberg(to_steinberg(a)), a);
  }
  EXPECT_EQ(to_steinberg(Th::X() * Th::X() + Th::Y() * Th::Y()).str(steinberg_names()), "z1^2-2*z2*q");
  try {
    to_steinberg(Th::X());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
}
