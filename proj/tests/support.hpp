#pragma once

// Independent oracles shared by the test files. None of them reuses the
// library routine it is compared against.

#include <array>
#include <random>
#include <vector>

#include "pfilt/pfilt.hpp"

namespace oracle {

using pfilt::FormalCharacter;
using pfilt::Int;
using pfilt::SystemPtr;
using pfilt::Weight;

/// A1 closed form: chi(n) = e^n + e^{n-2} + ... + e^{-n}.
inline FormalCharacter chi_a1(const SystemPtr& a1, Int n) {
  FormalCharacter c(a1);
  for (Int k = n; k >= -n; k -= 2) c.add_term(Weight{k}, 1);
  return c;
}

/// Kostant partition function for A2 in simple-root coordinates: the number
/// of ways to write a a1 + b a2 with the roots a1, a2, a1 + a2.
inline Int kostant_a2(Int a, Int b) { return a < 0 || b < 0 ? 0 : std::min(a, b) + 1; }

/// A2 weight multiplicity by Kostant's formula, summing over the six Weyl
/// group elements written out explicitly as matrices on fundamental-weight
/// coordinates.
inline Int kostant_multiplicity_a2(const Weight& lambda, const Weight& mu) {
  using M = std::array<Int, 4>;
  // s1 (a,b) = (-a, a+b), s2 (a,b) = (a+b, -b)
  const M id{1, 0, 0, 1}, s1{-1, 0, 1, 1}, s2{1, 1, 0, -1};
  auto mul = [](const M& x, const M& y) {
    return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
             x[2] * y[1] + x[3] * y[3]};
  };
  const std::vector<std::pair<M, int>> W = {{id, 1},           {s1, -1},
                                            {s2, -1},          {mul(s1, s2), 1},
                                            {mul(s2, s1), 1},  {mul(s1, mul(s2, s1)), -1}};
  const Int la = lambda[0] + 1, lb = lambda[1] + 1;
  Int total = 0;
  for (auto& [m, sign] : W) {
    const Int x = m[0] * la + m[1] * lb - (mu[0] + 1);
    const Int y = m[2] * la + m[3] * lb - (mu[1] + 1);
    // weight (x,y) = r1 a1 + r2 a2 with a1 = (2,-1), a2 = (-1,2)
    const Int n1 = 2 * x + y, n2 = x + 2 * y;
    if (n1 % 3 || n2 % 3) continue;
    total += sign * kostant_a2(n1 / 3, n2 / 3);
  }
  return total;
}

/// Random W-symmetric virtual character: a random integer combination of
/// Weyl orbit sums of small dominant weights.
inline FormalCharacter random_symmetric(const SystemPtr& sys, std::mt19937_64& rng, Int max_coord = 3,
                                        int orbits = 3) {
  std::uniform_int_distribution<Int> coord(0, max_coord), coeff(-3, 3);
  FormalCharacter c(sys);
  while (c.empty()) {
    for (int k = 0; k < orbits; ++k) {
      std::vector<Int> w(sys->rank());
      for (auto& x : w) x = coord(rng);
      const Int m = coeff(rng);
      for (auto& v : sys->weyl_orbit(Weight(w))) c.add_term(v, m);
    }
  }
  return c;
}

}  // namespace oracle
