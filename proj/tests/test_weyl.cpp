#include <gtest/gtest.h>

#include <deque>
#include <map>

#include "genhecke/weyl.hpp"
#include "support.hpp"

using namespace genhecke;
using W = ExtendedWeylElem;

namespace {

// 0-1 BFS over words in {s0, s, u, u^-1}, u and u^-1 of cost 0.
class LengthOracle {
 public:
  explicit LengthOracle(int q0, int bound) : q0_(q0) {
    std::deque<W> dq;
    W e = W::identity(q0);
    dist_[e] = 0;
    dq.push_back(e);
    const W gens[] = {W::gen_s0(q0), W::gen_s(q0), W::gen_u(q0), W::gen_u(q0).inverse()};
    while (!dq.empty()) {
      W x = dq.front();
      dq.pop_front();
      int d = dist_[x];
      for (int i = 0; i < 4; ++i) {
        W y = x * gens[i];
        if (std::abs(y.l1) > bound || std::abs(y.l2) > bound) continue;
        int nd = d + (i < 2 ? 1 : 0);
        auto it = dist_.find(y);
        if (it != dist_.end() && it->second <= nd) continue;
        dist_[y] = nd;
        if (i < 2) dq.push_back(y);
        else dq.push_front(y);
      }
    }
  }
  int length(const W& w) const { return dist_.at(w.without_torus()); }

 private:
  int q0_;
  std::map<W, int> dist_;
};

const LengthOracle& oracle() {
  static const LengthOracle o(3, 12);
  return o;
}

}  // namespace

TEST(Weyl, GroupLawExamples) {
  int q0 = 5;
  EXPECT_TRUE((W::gen_s(q0) * W::gen_s(q0)).is_identity());
  W us = W::gen_u(q0) * W::gen_s(q0);
  EXPECT_EQ(us, W::translation(q0, 1, 0));
  W uu = W::gen_u(q0) * W::gen_u(q0);
  EXPECT_EQ(uu, W::translation(q0, 1, 1));
  EXPECT_EQ(W::gen_s0(q0) * W::gen_u(q0), W::translation(q0, 1, 0));
}

TEST(Weyl, GroupAxiomsRandom) {
  for (int q0 : {2, 3, 4, 5}) {
    for (int t = 0; t < 200; ++t) {
      W a = gh_test::random_weyl(q0, 3), b = gh_test::random_weyl(q0, 3), c = gh_test::random_weyl(q0, 3);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a * a.inverse()).is_identity());
      EXPECT_TRUE((a.inverse() * a).is_identity());
    }
  }
}

TEST(Weyl, TorusConjugationByU) {
  int q0 = 7;
  W u = W::gen_u(q0);
  for (const auto& t : torus_elements(q0)) {
    W tw = W::torus(q0, t.e1, t.e2);
    EXPECT_EQ(u * tw * u.inverse(), W::torus(q0, t.e2, t.e1));
  }
}

TEST(Weyl, LengthExamples) {
  int q0 = 3;
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(weyl_length(W::translation(q0, n, 0)), n);
  EXPECT_EQ(weyl_length(W::gen_u(q0)), 0);
  EXPECT_EQ(weyl_length(W::gen_s0(q0)), 1);
  EXPECT_EQ(weyl_length(W::gen_s(q0)), 1);
  EXPECT_EQ(weyl_length(W::gen_s(q0) * W::gen_u(q0)), 1);
}

TEST(Weyl, LengthMatchesBfsOracle) {
  int q0 = 3;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (bool s : {false, true}) {
        W w{{q0 - 1, 1, 0}, a, b, s};
        EXPECT_EQ(weyl_length(w), oracle().length(w)) << w.str();
      }
}

TEST(Weyl, LengthAdditivityDetector) {
  int q0 = 3;
  for (int t = 0; t < 400; ++t) {
    W a = gh_test::random_weyl(q0, 2), b = gh_test::random_weyl(q0, 2);
    bool additive_formula = weyl_length(a * b) == weyl_length(a) + weyl_length(b);
    bool additive_oracle = oracle().length(a * b) == oracle().length(a) + oracle().length(b);
    EXPECT_EQ(additive_formula, additive_oracle);
    auto ra = reduced_word(a), rb = reduced_word(b);
    std::vector<AffGen> cat = ra.word;
    // move u^k of a past the word of b: u s u^-1 = s0
    for (AffGen g : rb.word) {
      bool flip = (ra.u_power % 2) != 0;
      cat.push_back(flip ? (g == AffGen::S ? AffGen::S0 : AffGen::S) : g);
    }
    // a word is reduced iff it admits no deletion, i.e. iff its oracle length is its size
    W full = W::identity(q0);
    for (AffGen g : cat) full = full * aff_gen(q0, g);
    bool deletable = oracle().length(full) < static_cast<int>(cat.size());
    EXPECT_EQ(additive_oracle, !deletable) << a.str() << " " << b.str();
  }
}

TEST(Weyl, ReducedWords) {
  int q0 = 5;
  auto r = reduced_word(W::translation(q0, 1, 0));
  ASSERT_EQ(r.word.size(), 1u);
  EXPECT_EQ(r.word[0], AffGen::S0);
  EXPECT_EQ(r.u_power, 1);
  EXPECT_TRUE(r.t.is_identity());
  auto id = reduced_word(W::identity(q0));
  EXPECT_TRUE(id.word.empty());
  EXPECT_EQ(id.u_power, 0);
  auto r2 = reduced_word(W::translation(q0, 2, 0));
  EXPECT_EQ(r2.word.size(), 2u);
  EXPECT_EQ(r2.u_power, 2);
  EXPECT_EQ(static_cast<int>(r2.word.size()), oracle().length(W::translation(3, 2, 0)));
  for (int t = 0; t < 300; ++t) {
    W w = gh_test::random_weyl(q0, 4);
    auto rw = reduced_word(w);
    EXPECT_EQ(word_product(q0, rw), w);
    EXPECT_EQ(static_cast<int>(rw.word.size()), weyl_length(w));
    for (std::size_t i = 1; i < rw.word.size(); ++i) EXPECT_NE(rw.word[i], rw.word[i - 1]);
  }
}

TEST(Weyl, Characters) {
  EXPECT_EQ(enumerate_characters(2).size(), 1u);
  auto o2 = enumerate_orbits(2);
  ASSERT_EQ(o2.size(), 1u);
  EXPECT_FALSE(o2[0].regular());
  auto o3 = enumerate_orbits(3);
  EXPECT_EQ(enumerate_characters(3).size(), 4u);
  EXPECT_EQ(o3.size(), 3u);
  EXPECT_EQ(std::count_if(o3.begin(), o3.end(), [](auto& o) { return !o.regular(); }), 2);
  for (int q0 : {2, 3, 4, 5, 7, 8, 9}) {
    auto chars = enumerate_characters(q0);
    auto orbs = enumerate_orbits(q0);
    EXPECT_EQ(static_cast<int>(chars.size()), (q0 - 1) * (q0 - 1));
    EXPECT_EQ(static_cast<int>(orbs.size()), (q0 * q0 - q0) / 2);
    std::size_t covered = 0;
    int singletons = 0;
    for (const auto& o : orbs) {
      covered += o.members.size();
      singletons += o.regular() ? 0 : 1;
      EXPECT_EQ(orbit_of(o.members.back()), o);
    }
    EXPECT_EQ(covered, chars.size());
    EXPECT_EQ(singletons, q0 - 1);
  }
}

TEST(Weyl, CharacterValuesAreMultiplicative) {
  int q0 = 7;
  for (const auto& chi : enumerate_characters(q0))
    for (int t = 0; t < 5; ++t) {
      auto a = gh_test::random_weyl(q0).t, b = gh_test::random_weyl(q0).t;
      EXPECT_EQ(chi.value(a * b), chi.value(a) * chi.value(b));
      EXPECT_EQ(chi.swapped().value(a), chi.value(a.swapped()));
    }
}
