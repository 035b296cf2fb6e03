#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "pfilt/g1b.hpp"
#include "support.hpp"

using namespace pfilt;

TEST(Zhat, RankOneShift) {
  auto a1 = RootSystem::build("A1");
  FormalCharacter want = FormalCharacter::monomial(a1, Weight{0}) + FormalCharacter::monomial(a1, Weight{-2});
  EXPECT_EQ(zhat_character(a1, Weight{0}, 2), want);
  auto b2 = RootSystem::build("B2");
  EXPECT_EQ(zhat_character(b2, Weight{3, -1}, 2).dimension(), 16);
  EXPECT_EQ(zhat_character(b2, b2->rho(), 2), steinberg_character(b2, 2, 1));
}

TEST(Decompose, RankOneP2) {
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 2);
  auto list = decompose(Weight{0}, sc);
  ASSERT_EQ(list.factors.size(), 2u);
  EXPECT_EQ(list.factors[0], (G1BFactor{Weight{0}, Weight{0}, Weight{0}, 1}));
  EXPECT_EQ(list.factors[1], (G1BFactor{Weight{-2}, Weight{0}, Weight{-1}, 1}));
  EXPECT_TRUE(I_lambda(list).empty());
}

TEST(Decompose, SteinbergWeightIsSimple) {
  for (auto* t : {"A2", "B2"})
    for (Int p : {2, 3, 5}) {
      auto rs = RootSystem::build(t);
      SimpleCharacters sc(rs, p);
      auto list = decompose((p - 1) * rs->rho(), sc);
      ASSERT_EQ(list.factors.size(), 1u);
      EXPECT_EQ(list.factors[0].mu1, rs->zero());
      EXPECT_EQ(list.factors[0].mult, 1);
    }
}

TEST(Decompose, Sp4AtTwoComputed) {
  // The full list for Z^_1(0), Sp4, p = 2, as computed by brute force.
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 2);
  auto list = decompose(Weight{0, 0}, sc);
  std::map<Weight, Int> got;
  for (auto& f : list.factors) got[f.weight] = f.mult;
  const std::map<Weight, Int> want = {{{0, 0}, 1}, {{2, -2}, 1}, {{-2, 1}, 1}, {{0, -1}, 1},
                                      {{-2, 0}, 2}, {{0, -2}, 2}, {{-4, 0}, 1}, {{-2, -2}, 1}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(reassemble(list, sc), zhat_character(b2, Weight{0, 0}, 2));
}

TEST(Decompose, DimensionConservation) {
  for (auto* t : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::build(t);
    const Int p = 2;
    SimpleCharacters sc(rs, p);
    for (Int a = 0; a < 4; ++a)
      for (Int b = 0; b < 4; ++b) {
        auto list = decompose(Weight{a, b}, sc);
        Int dim = 0;
        for (auto& f : list.factors) dim += f.mult * sc.simple(f.mu0)->dimension();
        EXPECT_EQ(dim, Int{1} << rs->num_positive_roots());
      }
  }
}

TEST(Decompose, MissingSimpleCharacterThrows) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 5, /*use_solver=*/false);
  EXPECT_THROW(decompose(Weight{0, 0}, sc), SimpleCharUnavailable);
}

TEST(ILambda, LargeLambdaOneHasEmptySet) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 3);
  // lambda1 = (2,2) = (h-2) rho: no factor digit dips below -1
  auto list = decompose(Weight{6, 6}, sc);
  EXPECT_TRUE(I_lambda(list).empty());
}

TEST(ILambda, SublistIsMonotone) {
  auto b2 = RootSystem::build("B2");
  SimpleCharacters sc(b2, 2);
  auto list = decompose(Weight{0, 0}, sc);
  auto full = I_lambda(list);
  for (std::size_t k = 0; k < list.factors.size(); ++k) {
    G1BFactorList part{list.lambda, list.p, {list.factors.begin(), list.factors.begin() + k}};
    for (int i : I_lambda(part)) EXPECT_NE(std::find(full.begin(), full.end(), i), full.end());
  }
}

namespace {

// h_lambda by brute force: maximum of <rho_J, alpha_J^v> over every
// connected subset J of I, each computed in a freshly built subsystem.
Int h_lambda_oracle(const RootSystem& rs, const std::vector<int>& I) {
  Int best = 0;
  const std::size_t n = I.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) J.push_back(I[k]);
    if (rs.connected_components(J).size() != 1) continue;
    auto sub = rs.subsystem(J);
    best = std::max(best, sub->coxeter_number() - 1);
  }
  return best + 1;
}

}  // namespace

TEST(HLambda, ConventionsAndOracle) {
  for (auto* t : {"A3", "B3", "C3", "A4", "D4", "F4", "B4"}) {
    auto rs = RootSystem::build(t);
    const int r = static_cast<int>(rs->rank());
    EXPECT_EQ(h_lambda(*rs, {}), 1) << t;
    std::vector<int> all(r);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(h_lambda(*rs, all), rs->coxeter_number()) << t;
    for (int mask = 1; mask < (1 << r); ++mask) {
      std::vector<int> I;
      for (int k = 0; k < r; ++k)
        if (mask >> k & 1) I.push_back(k);
      EXPECT_EQ(h_lambda(*rs, I), h_lambda_oracle(*rs, I)) << t << " mask " << mask;
    }
  }
}

TEST(HLambda, SingletonComponentsGiveTwo) {
  auto a3 = RootSystem::build("A3");
  auto b3 = RootSystem::build("B3");
  EXPECT_EQ(h_lambda(*a3, {0}), 2);
  EXPECT_EQ(h_lambda(*a3, {0, 2}), 2);
  EXPECT_EQ(h_lambda(*b3, {0, 2}), 2);
  EXPECT_EQ(h_lambda(*b3, {1}), 2);
  EXPECT_EQ(h_lambda(*a3, {0, 1}), 3);
  EXPECT_EQ(h_lambda(*b3, {1, 2}), 4);  // B2 subsystem
}

TEST(WeightEstimates, SmallBoxes) {
  for (auto* t : {"A2", "B2"})
    for (Int p : {2, 3}) {
      auto rs = RootSystem::build(t);
      SimpleCharacters sc(rs, p);
      const FormalCharacter st = steinberg_character(rs, p, 1);
      for (Int a = 0; a <= 2 * p; ++a)
        for (Int b = 0; b <= 2 * p; ++b) {
          auto rep = check_weight_estimates(*rs, decompose(Weight{a, b}, sc), st);
          EXPECT_TRUE(rep.ok()) << t << " p=" << p << " " << Weight{a, b}.str();
        }
    }
  auto a1 = RootSystem::build("A1");
  SimpleCharacters sc(a1, 3);
  auto rep = check_weight_estimates(*a1, decompose(Weight{0}, sc), steinberg_character(a1, 3, 1));
  EXPECT_EQ(rep.steinberg_max, 2);
  EXPECT_EQ(rep.steinberg_bound, 2);
}

TEST(LeviAlcove, HighestShortRootOfSubset) {
  auto b3 = RootSystem::build("B3");
  for (auto& J : connected_subsets(*b3, {0, 1, 2}))
    EXPECT_EQ(highest_short_root_of(*b3, J).coroot_height, h_J(*b3, J));
  EXPECT_EQ(connected_subsets(*b3, {0, 2}).size(), 2u);
  EXPECT_EQ(connected_subsets(*b3, {0, 1, 2}).size(), 6u);
  EXPECT_EQ(highest_short_root_of(*b3, {0, 1, 2}).weight, b3->highest_short_root().weight);
}

TEST(LeviAlcove, NoViolationsUnderTheBound) {
  auto b2 = RootSystem::build("B2");
  for (Int p : {2, 3, 5}) {
    SimpleCharacters sc(b2, p);
    for (Int a = 0; a <= 2 * p; ++a)
      for (Int b = 0; b <= 2 * p; ++b) {
        auto list = decompose(Weight{a, b}, sc);
        if (p >= 2 * h_lambda(*b2, I_lambda(list))) {
          EXPECT_TRUE(levi_alcove_violations(*b2, list).empty()) << p << Weight{a, b}.str();
        }
      }
  }
}
