#include <gtest/gtest.h>

#include "genhecke/vinberg.hpp"
#include "support.hpp"

using namespace genhecke;
using Th = ThetaElem<Integer>;

namespace {

FreeClass random_free(int terms = 3) {
  FreeClass f;
  for (int i = 0; i < terms; ++i)
    f.add_term({gh_test::uniform(0, 2), gh_test::uniform(0, 2), gh_test::uniform(-2, 2)},
               Integer(gh_test::uniform(-4, 4)));
  return f;
}

FMatrix diag(const GaloisField& f, const std::vector<int>& d) {
  FMatrix m(f, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = f.from_integer(d[i]);
  return m;
}

FMatrix random_invertible(const GaloisField& f, int n) {
  for (;;) {
    FMatrix p(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = f.element(gh_test::uniform(0, f.size() - 1));
    if (!p.det().is_zero()) return p;
  }
}

std::optional<ErrorKind> decompose_error(const FMatrix& a, const FMatrix& b, const FMatrix& c) {
  try {
    idempotent_block_decompose(a, b, c);
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST(Vinberg, MonoidNames) {
  for (auto n : {MonoidName::VT, MonoidName::VB, MonoidName::VT0, MonoidName::VB0, MonoidName::T, MonoidName::VGL2,
                 MonoidName::VGL20})
    EXPECT_EQ(parse_monoid(monoid_str(n)), n);
  try {
    parse_monoid("VX");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
  }
  EXPECT_TRUE(is_zero_fiber(MonoidName::VT0));
  EXPECT_FALSE(is_zero_fiber(MonoidName::VT));
  EXPECT_FALSE(rep_ring(MonoidName::VT).generators.empty());
}

TEST(Vinberg, QFibers) {
  FreeClass xy = FreeClass::monomial(Integer(1), {1, 1, 0});
  EXPECT_EQ(q_fiber_one(xy), LaurentClass::monomial(Integer(1), {1, 1}));
  // z2 = XY on the fiber q = 1
  EXPECT_EQ(q_fiber_one(FreeClass::monomial(Integer(1), {0, 0, 1})), q_fiber_one(xy));
  EXPECT_TRUE(q_fiber_zero(xy).is_zero());
  EXPECT_EQ(q_fiber_zero(FreeClass::monomial(Integer(1), {0, 0, 1})),
            FiberElem<Integer>::from_theta(Th::z2(), Integer(0)));
  for (int t = 0; t < 100; ++t) {
    FreeClass a = random_free(), b = random_free();
    ASSERT_EQ(q_fiber_one(a * b), q_fiber_one(a) * q_fiber_one(b));
    ASSERT_EQ(q_fiber_zero(a * b), q_fiber_zero(a) * q_fiber_zero(b));
    ASSERT_EQ(q_fiber_one(a + b), q_fiber_one(a) + q_fiber_one(b));
    ASSERT_EQ(theta_to_free(free_to_theta(a)), a);
    Th f = gh_test::random_theta(3, 3, 2, 2);
    Th g = gh_test::random_theta(3, 3, 2, 2);
    ASSERT_EQ(theta_to_free(f * g), theta_to_free(f) * theta_to_free(g));
  }
}

TEST(Vinberg, RVT0RingAxioms) {
  for (int t = 0; t < 100; ++t) {
    RVT0Class a = RVT0Class::from_free(random_free()), b = RVT0Class::from_free(random_free()),
              c = RVT0Class::from_free(random_free());
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    RVT0Class one = RVT0Class::from_free(FreeClass(1));
    ASSERT_EQ(one * a, a);
    ASSERT_EQ(a.dim() * b.dim(), (a * b).dim());
    // the class map from characters is multiplicative
    FreeClass f = random_free(), g = random_free();
    ASSERT_EQ(RVT0Class::from_free(f * g), RVT0Class::from_free(f) * RVT0Class::from_free(g));
  }
  RVT0Class x = RVT0Class::from_free(FreeClass::monomial(Integer(1), {1, 0, 0}));
  RVT0Class y = RVT0Class::from_free(FreeClass::monomial(Integer(1), {0, 1, 0}));
  RVT0Class xy = x * y;
  EXPECT_TRUE(xy.main.is_zero());
  EXPECT_EQ(xy.zero_mult, 1);
}

TEST(Vinberg, RelevantPart) {
  RVT0Class c = parse_rvt0("X^2+z2", Integer(3));
  RVT0Class r = relevant_part(c);
  EXPECT_EQ(r, parse_rvt0("X^2+z2", Integer(0)));
  EXPECT_EQ(relevant_part(r), r);
  for (int t = 0; t < 50; ++t) {
    RVT0Class a = RVT0Class::from_free(random_free());
    EXPECT_EQ(relevant_part(relevant_part(a)), relevant_part(a));
    EXPECT_EQ(relevant_part(a + a), relevant_part(a) + relevant_part(a));
  }
}

TEST(Vinberg, InvariantsBasis) {
  auto vt = invariants_basis(MonoidName::VT, 1);
  std::vector<std::string> labels;
  for (auto& e : vt) labels.push_back(e.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "z1", "q", "z2", "z2^-1"}));
  auto vt0 = invariants_basis(MonoidName::VT0, 2);
  for (auto& e : vt0) {
    EXPECT_EQ(e.label.find('q'), std::string::npos);
    EXPECT_EQ(e.value.swapped(), e.value);
  }
  for (auto& e : invariants_basis(MonoidName::VGL2, 3)) EXPECT_EQ(e.value.swapped(), e.value);
  // counts: z1^a z2^c with a + |c| <= 2 gives 1 + 3 + 5
  EXPECT_EQ(vt0.size(), 9u);
}

TEST(Vinberg, BlockExamples) {
  const GaloisField& f = GaloisField::get(5);
  auto d = idempotent_block_decompose(diag(f, {1, 0, 1}), diag(f, {0, 1, 1}), diag(f, {0, 0, 1}));
  EXPECT_EQ(std::make_tuple(d.d100, d.d010, d.d111, d.d000), std::make_tuple(1, 1, 1, 0));
  auto id = FMatrix::identity(f, 4);
  auto e = idempotent_block_decompose(id, id, id);
  EXPECT_EQ(std::make_tuple(e.d100, e.d010, e.d111, e.d000), std::make_tuple(0, 0, 4, 0));
  EXPECT_EQ(e.weights.size(), 8u);
}

TEST(Vinberg, BlockRandomConjugates) {
  for (int q0 : {2, 3, 4, 5, 7}) {
    const GaloisField& f = GaloisField::get(q0);
    for (int t = 0; t < 20; ++t) {
      int dims[4] = {gh_test::uniform(0, 2), gh_test::uniform(0, 2), gh_test::uniform(0, 2), gh_test::uniform(0, 2)};
      std::vector<int> ex, ey, e0;
      const int pat[4][3] = {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {0, 0, 0}};
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < dims[k]; ++i) {
          ex.push_back(pat[k][0]);
          ey.push_back(pat[k][1]);
          e0.push_back(pat[k][2]);
        }
      int n = static_cast<int>(ex.size());
      if (n == 0) continue;
      FMatrix p = random_invertible(f, n), pi = p.inverse();
      auto d = idempotent_block_decompose(p * diag(f, ex) * pi, p * diag(f, ey) * pi, p * diag(f, e0) * pi);
      EXPECT_EQ(std::make_tuple(d.d100, d.d010, d.d111, d.d000), std::make_tuple(dims[0], dims[1], dims[2], dims[3]));
      EXPECT_EQ(d.total(), n);
    }
  }
}

TEST(Vinberg, ForbiddenPatterns) {
  const GaloisField& f = GaloisField::get(3);
  const int bad[4][3] = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {0, 0, 1}};
  for (auto& b : bad) {
    // one good coordinate plus one forbidden coordinate, conjugated
    FMatrix p = random_invertible(f, 2), pi = p.inverse();
    FMatrix ex = p * diag(f, {1, b[0]}) * pi, ey = p * diag(f, {0, b[1]}) * pi, e0 = p * diag(f, {0, b[2]}) * pi;
    EXPECT_EQ(decompose_error(ex, ey, e0), ErrorKind::ForbiddenPattern);
    EXPECT_FALSE(block_pattern_allowed({b[0], b[1], b[2]}));
  }
  FMatrix two = diag(f, {2, 0});
  EXPECT_EQ(decompose_error(two, diag(f, {0, 0}), diag(f, {0, 0})), ErrorKind::NotIdempotent);
  FMatrix a = FMatrix::from_rows(f, {{f.one(), f.one()}, {f.zero(), f.zero()}});
  EXPECT_EQ(decompose_error(a, diag(f, {1, 0}), diag(f, {0, 0})), ErrorKind::NotCommuting);
  EXPECT_EQ(decompose_error(a, diag(f, {1, 0, 0}), diag(f, {0, 0})), ErrorKind::ValidationError);
}

TEST(Vinberg, InflResRoundTrip) {
  for (MonoidName n : {MonoidName::VT, MonoidName::VT0}) {
    for (int t = 0; t < 20; ++t) {
      TrackedClass c{n, random_free(), {}};
      TrackedClass r = res(infl(c));
      EXPECT_EQ(r, c);
      EXPECT_EQ(r.trail, (std::vector<std::string>{"Infl", "Res"}));
    }
  }
  TrackedClass b{MonoidName::VB, random_free(), {}};
  EXPECT_EQ(infl(res(b)), b);
  try {
    res(TrackedClass{MonoidName::VT, FreeClass(1), {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VariantMismatch);
  }
}

TEST(Vinberg, Characteristic) {
  Th z1 = Th::z1();
  TrackedClass c{MonoidName::VT0, theta_to_free(z1 * z1 + Th::z2()), {}};
  TrackedClass ch = characteristic(c);
  EXPECT_EQ(ch.ring, MonoidName::VGL20);
  EXPECT_EQ(ch.data, c.data);
  EXPECT_EQ(ch.trail, (std::vector<std::string>{"Infl", "Ind"}));
  EXPECT_EQ(characteristic(TrackedClass{MonoidName::VT, theta_to_free(z1), {}}).ring, MonoidName::VGL2);
  try {
    characteristic(TrackedClass{MonoidName::VT, theta_to_free(Th::X()), {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
  // relevant classes land in the mod-p Bernstein target: symmetric elements of the zero fiber
  for (auto& e : invariants_basis(MonoidName::VT0, 2)) {
    RVT0Class r = relevant_part(RVT0Class::from_free(theta_to_free(e.value)));
    EXPECT_EQ(r.main, FiberElem<Integer>::from_theta(e.value, Integer(0)));
  }
}
