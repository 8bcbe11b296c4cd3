#include <gtest/gtest.h>

#include "genhecke/io.hpp"
#include "support.hpp"

using namespace genhecke;
using nlohmann::json;

namespace {

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ValidationError;
}

}  // namespace

TEST(Io, WeylRoundTrip) {
  for (int q0 : {2, 3, 5}) {
    for (int t = 0; t < 50; ++t) {
      ExtendedWeylElem w = gh_test::random_weyl(q0, 3);
      json j = io::to_json(w);
      EXPECT_EQ(io::weyl_from_json(q0, json::parse(j.dump())), w);
    }
  }
  json s = io::to_json(ExtendedWeylElem::gen_s(3));
  EXPECT_EQ(s.dump(), R"({"lambda":[0,0],"t":[0,0],"w":"s"})");
  for (const auto& c : enumerate_characters(5)) EXPECT_EQ(io::character_from_json(5, io::to_json(c)), c);
}

TEST(Io, HeckeRoundTrip) {
  for (int t = 0; t < 50; ++t) {
    auto p = gh_test::random_prop<Integer>(3, 3, 2);
    io::HeckeElem<Integer> hp = p;
    EXPECT_EQ(std::get<ProPElem<Integer>>(io::hecke_from_json(json::parse(io::to_json(hp).dump()))), p);
    auto h1 = gh_test::random_h1();
    EXPECT_EQ(std::get<H1Elem<Integer>>(io::hecke_from_json(io::to_json(h1))), h1);
    auto h2 = gh_test::random_h2();
    EXPECT_EQ(std::get<H2Elem<Integer>>(io::hecke_from_json(io::to_json(h2))), h2);
  }
  auto s0 = H1Elem<Integer>::S(Integer(0));
  json j = io::to_json(s0);
  EXPECT_EQ(j.at("coeff"), "q=0");
  EXPECT_EQ(std::get<H1Elem<Integer>>(io::hecke_from_json(j)), s0);
}

TEST(Io, CyclotomicIdempotentRoundTrip) {
  int q0 = 4;
  for (const auto& o : enumerate_orbits(q0)) {
    auto e = idempotent<CycloLoc>(o);
    json j = io::to_json(e);
    auto back = std::get<ProPElem<CycloLoc>>(io::hecke_from_json<CycloLoc>(json::parse(j.dump()), q0 - 1));
    EXPECT_EQ(back, e);
  }
}

TEST(Io, ModuleRoundTrip) {
  const GaloisField& f = GaloisField::get(3, 2);
  for (Component c : {Component::NonRegular, Component::Regular}) {
    for (const auto& p : atlas_points(f, c)) {
      ModuleData m = module_at_point(p);
      ClassRecord r = classify(m);
      json j = io::to_json(m, r);
      ModuleData back = io::module_from_json(json::parse(j.dump()));
      EXPECT_EQ(back.S, m.S);
      EXPECT_EQ(back.U, m.U);
      EXPECT_EQ(back.eps1.has_value(), m.eps1.has_value());
      EXPECT_EQ(classify(back), r);
      EXPECT_EQ(io::point_from_json(f, io::to_json(p)), p);
    }
  }
  ModuleData ss = module_at_point(ModulePoint::nonregular(GaloisField::get(3), GaloisField::get(3).zero(),
                                                          GaloisField::get(3).one()));
  json j = io::to_json(ss, classify(ss));
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("supersingular"), true);
  EXPECT_EQ(j.at("class"), "standard");
  EXPECT_EQ(j.at("U").dump(), R"([["0","2"],["2","0"]])");
}

TEST(Io, Errors) {
  EXPECT_EQ(error_of([] { io::weyl_from_json(3, json::parse(R"({"t":[0],"lambda":[0,0],"w":"1"})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { io::weyl_from_json(3, json::parse(R"({"t":[0,0],"lambda":[0,0],"w":"u"})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { io::hecke_from_json(json::parse(R"({"algebra":"H3","terms":[]})")); }),
            ErrorKind::ParseError);
  EXPECT_EQ(error_of([] {
              io::hecke_from_json(json::parse(R"({"algebra":"H1","terms":[{"basis":"V","coeff":"1"}]})"));
            }),
            ErrorKind::ParseError);
  EXPECT_EQ(error_of([] {
              io::hecke_from_json(json::parse(
                  R"({"algebra":"ProP","q0":3,"terms":[{"basis":{"t":[0,0],"lambda":[0,0],"w":"1"},"coeff":"X"}]})"));
            }),
            ErrorKind::ParseError);
  json e = io::error_json(Error(ErrorKind::FieldTooLarge, "too big"));
  EXPECT_EQ(e.at("error").at("kind"), "FieldTooLarge");
}
