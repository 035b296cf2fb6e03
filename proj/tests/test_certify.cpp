#include <gtest/gtest.h>

#include <random>

#include "pfilt/certify.hpp"
#include "pfilt/json_io.hpp"
#include "support.hpp"

using namespace pfilt;

TEST(Criteria, SmallAndGlobal) {
  auto a2 = RootSystem::build("A2");
  EXPECT_TRUE(criteria(*a2, a2->zero(), 3).small);  // p >= 2h - 3
  EXPECT_TRUE(criteria(*a2, a2->zero(), 3).global_bound);
  EXPECT_FALSE(criteria(*a2, a2->zero(), 2).global_bound);
  auto b2 = RootSystem::build("B2");
  EXPECT_TRUE(criteria(*b2, Weight{40, 3}, 11).global_bound);
  EXPECT_FALSE(criteria(*b2, Weight{40, 3}, 7).global_bound);
  EXPECT_TRUE(criteria(*b2, b2->zero(), 5).small);
  EXPECT_FALSE(criteria(*b2, b2->zero(), 3).small);
}

TEST(Criteria, SmallFlagForSl3AtFive) {
  auto a2 = RootSystem::build("A2");
  for (Int a = 0; a < 25; ++a)
    for (Int b = 0; b < 25; ++b) EXPECT_EQ(criteria(*a2, Weight{a, b}, 5).small, a / 5 + b / 5 <= 2);
}

TEST(Criteria, LargeOnTheConeBoundary) {
  for (auto* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    for (Int p : {2, 5}) {
      const Weight l = p * (rs->coxeter_number() - 2) * rs->rho();
      EXPECT_TRUE(criteria(*rs, l, p).large);
      EXPECT_FALSE(criteria(*rs, l - Weight(std::vector<Int>(rs->rank(), 1)), p).large);
    }
  }
}

TEST(Criteria, RegionGapExample) {
  auto a2 = RootSystem::build("A2");
  auto r = criteria(*a2, Weight{30, 0}, 5);
  EXPECT_FALSE(r.large);
  EXPECT_FALSE(r.small);
}

TEST(Criteria, NonDominantRejected) {
  auto a2 = RootSystem::build("A2");
  EXPECT_THROW(criteria(*a2, Weight{-1, 2}, 3), NotDominant);
}

TEST(Criteria, GlobalImpliesMainOnRandomInputs) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<Int> coord(0, 40);
  const Int primes[] = {2, 3, 5, 7, 11, 13};
  const char* types[] = {"A1", "A2", "B2", "A1xA1"};
  std::map<std::pair<std::string, Int>, std::unique_ptr<SimpleCharacters>> sc;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::string t = types[trial % 4];
    const Int p = primes[(trial / 4) % 6];
    auto& s = sc[{t, p}];
    if (!s) s = std::make_unique<SimpleCharacters>(RootSystem::build(t), p);
    const RootSystem& rs = *s->system();
    std::vector<Int> c(rs.rank());
    for (auto& x : c) x = coord(rng);
    const Weight l(c);
    auto list = decompose(l, *s);
    auto r = criteria(rs, l, p, &list);
    if (r.global_bound) {
      EXPECT_TRUE(r.main_bound) << t << " p=" << p << " " << l.str();
    }
  }
}

TEST(Certify, SteinbergWeight) {
  for (auto* t : {"A2", "B2"})
    for (Int p : {2, 3, 5}) {
      auto rs = RootSystem::build(t);
      SimpleCharacters sc(rs, p);
      auto c = certify((p - 1) * rs->rho(), sc);
      ASSERT_EQ(c.lines.size(), 1u);
      EXPECT_EQ(c.lines[0], (CertLine{(p - 1) * rs->rho(), rs->zero(), 1}));
      EXPECT_EQ(c.status, CertStatus::Guaranteed);
    }
}

TEST(Certify, RankOneTwoLines) {
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 2);
  auto c = certify(Weight{2}, sc);
  ASSERT_EQ(c.lines.size(), 2u);
  EXPECT_EQ(c.lines[0], (CertLine{Weight{0}, Weight{1}, 1}));
  EXPECT_EQ(c.lines[1], (CertLine{Weight{0}, Weight{0}, 1}));
  EXPECT_TRUE(euler_identity(c, sc));
}

TEST(Certify, Sp4ZeroReassemblesTrivialCharacter) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 2);
  auto c = certify(Weight{0, 0}, sc);
  ASSERT_EQ(c.lines.size(), 1u);
  EXPECT_EQ(c.lines[0], (CertLine{b2->zero(), b2->zero(), 1}));
  EXPECT_TRUE(euler_identity(c, sc));
}

TEST(Certify, BottomAlcoveRestrictedWeights) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 7);
  for (auto& l : restricted_weights(2, 7)) {
    if (!in_bottom_alcove(*b2, l, 7)) continue;
    auto c = certify(l, sc);
    EXPECT_TRUE(euler_identity(c, sc)) << l.str();
    EXPECT_TRUE(c.nonnegative());
  }
}

TEST(Certify, StatusAssignment) {
  Certificate c;
  c.lines = {{Weight{0}, Weight{0}, 1}, {Weight{0}, Weight{1}, -1}};
  assign_status(c, Flag::Small);
  EXPECT_EQ(c.status, CertStatus::Failed);  // a negative line wins over any flag
  c.lines[1].mult = 1;
  assign_status(c, Flag::None);
  EXPECT_EQ(c.status_string(), "CHAR_CONSISTENT");
  assign_status(c, Flag::OneWall);
  EXPECT_EQ(c.status_string(), "GUARANTEED:one_wall");
}

TEST(Certify, UnknownWithoutSimpleCharacters) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 5, /*use_solver=*/false);
  auto c = certify(Weight{0, 0}, sc);
  EXPECT_EQ(c.status, CertStatus::Unknown);
  EXPECT_FALSE(c.note.empty());
}

TEST(Certify, JsonRoundTrip) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 3);
  for (Int a = 0; a < 6; ++a) {
    auto c = certify(Weight{a, 4}, sc);
    const std::string text = to_json(c).dump();
    auto back = certificate_from_json(json::parse(text), 2);
    EXPECT_EQ(to_json(back).dump(), text);
    EXPECT_EQ(back.status, c.status);
    EXPECT_EQ(back.flag, c.flag);
  }
}

TEST(Refine, IdentityAtSameLevel) {
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 3);
  auto c = certify(Weight{7}, sc);
  auto r = refine(c, 1, sc);
  EXPECT_EQ(r.lines, c.lines);
  EXPECT_EQ(r.status, c.status);
}

TEST(Refine, RankOneGoodFiltrationToLevelOne) {
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 2);
  auto r = refine(good_filtration_certificate(*a1, Weight{2}, 2), 1, sc);
  ASSERT_EQ(r.lines.size(), 2u);
  EXPECT_EQ(r.lines[0], (CertLine{Weight{0}, Weight{1}, 1}));
  EXPECT_EQ(r.lines[1], (CertLine{Weight{0}, Weight{0}, 1}));
}

TEST(Refine, GoodFiltrationMatchesCertify) {
  for (auto* t : {"A1", "A2", "B2"})
    for (Int p : {2, 3}) {
      auto rs = RootSystem::build(t);
      SimpleCharacters sc(rs, p);
      for (Int a = 0; a <= 2 * p; ++a) {
        std::vector<Int> c(rs->rank(), 1);
        c[0] = a;
        const Weight l(c);
        auto r = refine(good_filtration_certificate(*rs, l, p), 1, sc);
        auto d = certify(l, sc);
        EXPECT_EQ(r.lines, d.lines) << t << " " << l.str();
      }
    }
}

TEST(Refine, LowerTargetRejected) {
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 2);
  EXPECT_THROW(refine(certify(Weight{3}, sc), 0, sc), Error);
}

TEST(Divisibility, Examples) {
  auto a1 = RootSystem::build("A1");
  const FormalCharacter st = steinberg_character(a1, 2, 1);
  auto rep = divisibility_report(st * st * st, 2, 1);
  EXPECT_TRUE(rep.divisible);
  EXPECT_TRUE(rep.summand_ok);
  EXPECT_EQ(rep.steinberg_coefficient, 2);
  EXPECT_EQ(*rep.quotient, st * st);
  EXPECT_FALSE(divisibility_report(FormalCharacter::one(a1), 2, 1, false).divisible);
  auto a2 = RootSystem::build("A2");
  const FormalCharacter chi = weyl_character(a2, Weight{1, 2});
  auto r2 = divisibility_report(chi * steinberg_character(a2, 3, 1), 3, 1, false);
  ASSERT_TRUE(r2.divisible);
  EXPECT_EQ(*r2.quotient, chi);
}

TEST(SteinbergIdentity, SmallCases) {
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 2);
  EXPECT_TRUE(steinberg_component_identity(Weight{0}, 1, 1, sc));
  for (Int l = 0; l <= 8; ++l) {
    EXPECT_TRUE(steinberg_component_identity(Weight{l}, 1, 1, sc)) << l;
    EXPECT_TRUE(steinberg_component_identity(Weight{l}, 0, 2, sc)) << l;
  }
}
