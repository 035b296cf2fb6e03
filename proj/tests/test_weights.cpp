#include <gtest/gtest.h>

#include <random>

#include "pfilt/weights.hpp"

using namespace pfilt;

TEST(Split, DigitwiseDivision) {
  auto s = split(Weight{7, 3}, 5);
  EXPECT_EQ(s.low, (Weight{2, 3}));
  EXPECT_EQ(s.high, (Weight{1, 0}));
  auto r = split(Weight{4, 1}, 5);
  EXPECT_EQ(r.low, (Weight{4, 1}));
  EXPECT_TRUE(r.high.is_zero());
}

TEST(Split, FloorDivisionOnNegatives) {
  auto s = split(Weight{-2, 1}, 5);
  EXPECT_EQ(s.low, (Weight{3, 1}));
  EXPECT_EQ(s.high, (Weight{-1, 0}));
  auto t = split(Weight{-4}, 2, 2);
  EXPECT_EQ(t.low, Weight{0});
  EXPECT_EQ(t.high, Weight{-1});
}

TEST(Split, RandomRoundTrip) {
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<Int> coord(-500, 500);
  std::uniform_int_distribution<int> level(1, 3);
  const Int primes[] = {2, 3, 5, 7, 11};
  for (int trial = 0; trial < 10000; ++trial) {
    const Int p = primes[trial % 5];
    const int n = level(rng);
    Weight w{coord(rng), coord(rng), coord(rng)};
    auto s = split(w, p, n);
    EXPECT_EQ(s.low + ipow(p, n) * s.high, w);
    EXPECT_TRUE(is_restricted(s.low, p, n));
  }
}

TEST(Restricted, Membership) {
  auto a2 = RootSystem::build("A2");
  EXPECT_TRUE(is_restricted(2 * a2->rho(), 3));
  EXPECT_TRUE(is_restricted(a2->zero(), 2));
  EXPECT_FALSE(is_restricted(Weight{3, 0}, 3));
  EXPECT_FALSE(is_restricted(Weight{-1, 0}, 3));
  EXPECT_EQ(restricted_weights(2, 2).size(), 4u);
  EXPECT_EQ(restricted_weights(3, 3, 2).size(), 729u);
}

TEST(Digits, ReassembleToWeight) {
  auto d = padic_digits(Weight{11, 4}, 3);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[0], (Weight{2, 1}));
  EXPECT_EQ(d[1], (Weight{0, 1}));
  EXPECT_EQ(d[2], (Weight{1, 0}));
}

TEST(DotDominantize, RankOneExamples) {
  auto a1 = RootSystem::build("A1");
  auto d = dot_dominantize(*a1, Weight{4});
  EXPECT_EQ(d.sign, 1);
  EXPECT_EQ(d.weight, Weight{4});
  EXPECT_EQ(dot_dominantize(*a1, Weight{-1}).sign, 0);
  auto e = dot_dominantize(*a1, Weight{-3});
  EXPECT_EQ(e.sign, -1);
  EXPECT_EQ(e.weight, Weight{1});
}

TEST(DotDominantize, AgreesWithDotActionOfReturnedElement) {
  auto b2 = RootSystem::build("B2");
  for (Int a = -6; a <= 6; ++a)
    for (Int b = -6; b <= 6; ++b) {
      auto d = dot_dominantize(*b2, Weight{a, b});
      if (d.sign == 0) continue;
      EXPECT_TRUE(b2->is_dominant(d.weight));
      EXPECT_EQ(dot_action(*b2, d.w, Weight{a, b}), d.weight);
      EXPECT_EQ(d.sign, d.w.sign());
    }
}

TEST(Alcove, BottomAlcove) {
  auto a2 = RootSystem::build("A2");
  auto b2 = RootSystem::build("B2");
  EXPECT_TRUE(in_bottom_alcove(*a2, a2->zero(), 2));
  EXPECT_FALSE(in_bottom_alcove(*a2, Weight{1, 1}, 3));
  EXPECT_TRUE(in_bottom_alcove(*b2, Weight{1, 0}, 5));
  EXPECT_THROW(in_bottom_alcove(*a2, Weight{-1, 0}, 3), NotDominant);
}

TEST(Alcove, OneWallRegion) {
  auto a2 = RootSystem::build("A2");
  EXPECT_FALSE(in_one_wall_region(*a2, Weight{1, 1}, 5));
  EXPECT_TRUE(in_one_wall_region(*a2, Weight{1, 5}, 5));
  auto b2 = RootSystem::build("B2");
  // lambda1 = (h-2) rho + dominant
  EXPECT_TRUE(in_one_wall_region(*b2, 5 * (Weight{2, 2} + Weight{1, 3}), 5));
}

TEST(Ipow, OverflowIsDetected) {
  EXPECT_EQ(ipow(7, 3), 343);
  EXPECT_THROW(ipow(10, 30), Error);
}
