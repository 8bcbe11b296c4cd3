#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "genhecke/satake.hpp"
#include "support.hpp"

using namespace genhecke;
using Th = ThetaElem<Integer>;

namespace {

// Hall numbers by brute force: subgroups H of Z/p^a x Z/p^b with H of type mu
// and G/H of type lam. Types are read off |p^k H| and |p^k G + H|.
class HallCounter {
 public:
  HallCounter(int p, int a, int b) : p_(p), na_(ipow(p, a)), nb_(ipow(p, b)) {
    std::set<std::vector<bool>> seen;
    int order = na_ * nb_;
    for (int g1 = 0; g1 < order; ++g1)
      for (int g2 = g1; g2 < order; ++g2) {
        auto h = generate(g1, g2);
        if (seen.insert(h).second) ++counts_[{type_of_quotient(h), type_of_sub(h)}];
      }
  }

  long count(Coweight lam, Coweight mu) const {
    auto it = counts_.find({lam, mu});
    return it == counts_.end() ? 0 : it->second;
  }

 private:
  static int ipow(int p, int e) {
    int r = 1;
    while (e-- > 0) r *= p;
    return r;
  }
  int add(int x, int y) const { return ((x / nb_ + y / nb_) % na_) * nb_ + (x % nb_ + y % nb_) % nb_; }
  int mul(int k, int x) const { return ((k * (x / nb_)) % na_) * nb_ + (k * (x % nb_)) % nb_; }

  std::vector<bool> generate(int g1, int g2) const {
    std::vector<bool> h(na_ * nb_, false);
    int x = 0;
    do {
      int y = x;
      do {
        h[y] = true;
        y = add(y, g2);
      } while (y != x);
      x = add(x, g1);
    } while (x != 0);
    return h;
  }

  int logp(long v) const {
    int e = 0;
    while (v > 1) { v /= p_; ++e; }
    return e;
  }

  // parts > k counted from e_k = log |p^k A|
  Coweight type_from(const std::vector<int>& e) const {
    int parts[2] = {0, 0};
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      int gt = e[k] - e[k + 1];
      if (gt >= 1) ++parts[0];
      if (gt >= 2) ++parts[1];
    }
    return {parts[0], parts[1]};
  }

  Coweight type_of_sub(const std::vector<bool>& h) const {
    std::vector<int> e;
    for (int k = 0, pk = 1; k <= 9; ++k, pk *= p_) {
      std::set<int> img;
      for (int x = 0; x < static_cast<int>(h.size()); ++x)
        if (h[x]) img.insert(mul(pk, x));
      e.push_back(logp(static_cast<long>(img.size())));
    }
    return type_from(e);
  }

  Coweight type_of_quotient(const std::vector<bool>& h) const {
    long hs = std::count(h.begin(), h.end(), true);
    std::vector<int> e;
    int order = static_cast<int>(h.size());
    for (int k = 0, pk = 1; k <= 9; ++k, pk *= p_) {
      std::vector<bool> s(order, false);
      for (int x = 0; x < order; ++x) {
        int px = mul(pk, x);
        for (int y = 0; y < order; ++y)
          if (h[y]) s[add(px, y)] = true;
      }
      e.push_back(logp(std::count(s.begin(), s.end(), true) / hs));
    }
    return type_from(e);
  }

  int p_, na_, nb_;
  std::map<std::pair<Coweight, Coweight>, long> counts_;
};

std::vector<Coweight> dominants(int max_entry) {
  std::vector<Coweight> v;
  for (int a = 0; a <= max_entry; ++a)
    for (int b = 0; b <= a; ++b) v.push_back({a, b});
  return v;
}

Integer eval_at(const GenPoly<Integer>& f, int q0) {
  return f.eval(Integer(q0), Integer(1), [](const Integer& c) { return c; });
}

SphericalElem random_spherical() {
  SphericalElem h;
  int terms = gh_test::uniform(1, 3);
  for (int i = 0; i < terms; ++i)
    h.add_term({gh_test::uniform(0, 2), gh_test::uniform(-1, 1), gh_test::uniform(0, 1)},
               Integer(gh_test::uniform(-4, 4)));
  return h;
}

}  // namespace

TEST(Satake, GeneratorImages) {
  EXPECT_EQ(satake_iso(T10()), Th::X() + Th::Y());
  EXPECT_EQ(satake_iso(T11()), Th::z2());
  EXPECT_EQ(satake_iso(T11(-1)), Th::z2(-1));
  EXPECT_EQ(satake_iso(q_spherical() * T11()), Th::X() * Th::Y());
  EXPECT_EQ(satake_iso(T10() * T10()), parse_theta("X^2+Y^2+2*q*z2"));
  EXPECT_EQ(satake_image_dominant({1, 0}), Th::X() + Th::Y());
  EXPECT_EQ(satake_image_dominant({2, 0}), parse_theta("X^2+Y^2+q*z2-z2"));
  EXPECT_EQ(satake_image_dominant({1, 1}), Th::z2());
  EXPECT_TRUE(satake_image_dominant({4, 1}).is_symmetric());
}

TEST(Satake, RingIsomorphism) {
  for (int t = 0; t < 100; ++t) {
    SphericalElem a = random_spherical(), b = random_spherical();
    ASSERT_EQ(satake_iso(a * b), satake_iso(a) * satake_iso(b));
    ASSERT_EQ(satake_iso(a + b), satake_iso(a) + satake_iso(b));
    ASSERT_TRUE(satake_iso(a).is_symmetric());
    ASSERT_EQ(satake_inverse(satake_iso(a)), a);
    Th f = gh_test::random_symmetric();
    ASSERT_EQ(satake_iso(satake_inverse(f)), f);
  }
  try {
    satake_inverse(Th::X());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
  }
}

TEST(Satake, StructureConstantExamples) {
  auto c = structure_constants({1, 0}, {1, 0});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at({2, 0}).str(), "1");
  EXPECT_EQ(c.at({1, 1}).str(), "q+1");
  auto d = structure_constants({2, 0}, {1, 0});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.at({3, 0}).str(), "1");
  EXPECT_EQ(d.at({2, 1}).str(), "q");
  for (Coweight l : dominants(3)) {
    auto e = structure_constants({1, 1}, l);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e.begin()->first, Coweight(l.first + 1, l.second + 1));
    EXPECT_EQ(e.begin()->second.str(), "1");
  }
}

TEST(Satake, HallOracleExamples) {
  EXPECT_EQ(hall_oracle({1, 0}, {1, 0}, {1, 1}, 2), 3);
  EXPECT_EQ(hall_oracle({1, 0}, {1, 0}, {2, 0}, 3), 1);
  for (int p : {2, 3, 5}) EXPECT_EQ(hall_oracle({1, 0}, {1, 0}, {0, 0}, p), 0);
  try {
    hall_oracle({5, 0}, {1, 0}, {6, 0}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Satake, HallOracleAgreesWithSubgroupCount) {
  for (int p : {2, 3, 5}) {
    int max_total = p == 2 ? 4 : 3;
    for (Coweight nu : dominants(max_total)) {
      int total = nu.first + nu.second;
      if (total > max_total) continue;
      HallCounter hc(p, nu.first, nu.second);
      for (Coweight lam : dominants(total))
        for (Coweight mu : dominants(total)) {
          if (lam.first + lam.second + mu.first + mu.second != total) continue;
          EXPECT_EQ(hall_oracle(lam, mu, nu, p), hc.count(lam, mu))
              << p << " " << coweight_str(lam) << coweight_str(mu) << coweight_str(nu);
        }
    }
  }
}

TEST(Satake, OracleCertification) {
  const int pts[3] = {2, 3, 5};
  for (Coweight lam : dominants(2))
    for (Coweight mu : dominants(2)) {
      auto sc = structure_constants(lam, mu);
      int total = lam.first + lam.second + mu.first + mu.second;
      for (Coweight nu : dominants(total)) {
        if (nu.first + nu.second != total) continue;
        if (nu.first > 4) {
          EXPECT_EQ(sc.count(nu), 0u);
          continue;
        }
        GenPoly<Integer> n = sc.count(nu) ? sc.at(nu) : GenPoly<Integer>();
        ASSERT_LE(n.degree(), 2);
        // Lagrange interpolation through the three oracle values must reproduce n
        Rational vals[3];
        for (int i = 0; i < 3; ++i) vals[i] = Rational(hall_oracle(lam, mu, nu, pts[i]));
        for (int x = 0; x <= 7; ++x) {
          Rational acc = 0;
          for (int i = 0; i < 3; ++i) {
            Rational li = 1;
            for (int j = 0; j < 3; ++j)
              if (j != i) li *= Rational(x - pts[j]) / Rational(pts[i] - pts[j]);
            acc += vals[i] * li;
          }
          EXPECT_EQ(acc, Rational(eval_at(n, x))) << coweight_str(lam) << coweight_str(mu) << coweight_str(nu);
        }
      }
    }
}

TEST(Satake, Commutativity) {
  for (Coweight lam : dominants(3))
    for (Coweight mu : dominants(3)) EXPECT_EQ(structure_constants(lam, mu), structure_constants(mu, lam));
}

TEST(Satake, ModPConstants) {
  auto c = structure_constants({1, 0}, {1, 0});
  EXPECT_EQ(eval_at(c.at({1, 1}), 0), 1);
  // z1^2 = S(T_(2,0)) + z2 at q = 0
  Th lhs = (Th::z1() * Th::z1()).subst_q(Integer(0));
  Th rhs = (satake_image_dominant({2, 0}) + Th::z2()).subst_q(Integer(0));
  EXPECT_EQ(lhs, rhs);
}

TEST(Satake, CentralDiagram) {
  for (int a = 0; a <= 4; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = 0; c + a + std::abs(b) <= 4; ++c) {
        SphericalElem h = SphericalElem::monomial(Integer(1), {a, b, c});
        H1Elem<Integer> z = central_elements(h);
        ASSERT_TRUE(is_central(z));
        EXPECT_EQ(bernstein_iso(z), satake_iso(h)) << h.str(spherical_names());
      }
  for (int t = 0; t < 20; ++t) {
    SphericalElem h = random_spherical();
    EXPECT_EQ(bernstein_iso(central_elements(h)), satake_iso(h));
  }
}

TEST(Satake, Herzig) {
  for (int q0 : {2, 3, 4, 5}) {
    HerzigReport r = herzig_compare(q0, 3);
    for (const auto& row : r.rows) EXPECT_TRUE(row.ok) << row.label << ": " << row.lhs << " vs " << row.rhs;
    EXPECT_TRUE(r.ok());
  }
}
