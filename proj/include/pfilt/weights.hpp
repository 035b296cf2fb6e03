#pragma once

// Weight lattice arithmetic: p-adic digits, restricted weights, the dot
// action and alcove tests.

#include <cstdint>
#include <utility>

#include "pfilt/rootsys.hpp"

namespace pfilt {

/// p^n, throwing on overflow.
inline Int ipow(Int p, int n) {
  Int r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > INT64_MAX / p) throw Error("integer overflow computing p^n");
    r *= p;
  }
  return r;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// lambda = low + p^n high with low in X_n.
struct PAdicSplit {
  Weight low;
  Weight high;
  Int p = 0;
  int n = 1;
};

inline PAdicSplit split(const Weight& lambda, Int p, int n = 1) {
  const Int q = ipow(p, n);
  PAdicSplit s{Weight(lambda.size()), Weight(lambda.size()), p, n};
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    s.high[i] = floor_div(lambda[i], q);
    s.low[i] = lambda[i] - q * s.high[i];
  }
  return s;
}

/// All p-adic digits of a dominant weight, lowest first: lambda = sum p^k d_k.
inline std::vector<Weight> padic_digits(const Weight& lambda, Int p) {
  std::vector<Weight> digits;
  Weight rest = lambda;
  while (!rest.is_zero()) {
    auto s = split(rest, p, 1);
    digits.push_back(s.low);
    rest = s.high;
    for (Int x : rest)
      if (x < 0) throw NotDominant("p-adic digits requested for non-dominant " + lambda.str());
  }
  return digits;
}

/// lambda in X_n.
inline bool is_restricted(const Weight& lambda, Int p, int n = 1) {
  const Int q = ipow(p, n);
  for (Int x : lambda)
    if (x < 0 || x >= q) return false;
  return true;
}

/// Every weight of X_n for the given rank, in lexicographic order.
inline std::vector<Weight> restricted_weights(std::size_t rank, Int p, int n = 1) {
  const Int q = ipow(p, n);
  std::vector<Weight> out;
  Weight w(rank);
  for (;;) {
    out.push_back(w);
    std::size_t i = rank;
    while (i > 0 && w[i - 1] == q - 1) w[--i] = 0;
    if (i == 0) return out;
    ++w[i - 1];
  }
}

struct DotDominant {
  int sign = 0;  // 0 when mu + rho is singular
  Weight weight;
  WeylElement w;
};

/// The dominant nu with w . mu = nu under w . mu = w(mu + rho) - rho, and
/// sign = det(w); sign 0 if mu + rho lies on a reflecting hyperplane.
inline DotDominant dot_dominantize(const RootSystem& rs, const Weight& mu) {
  auto [dom, w] = rs.dominant_representative(mu + rs.rho());
  for (Int x : dom)
    if (x == 0) return {0, Weight(), std::move(w)};
  return {w.sign(), dom - rs.rho(), std::move(w)};
}

/// w . mu.
inline Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  return rs.act(w, mu + rs.rho()) - rs.rho();
}

/// <mu + rho, a0^v> <= p on every irreducible component.
inline bool in_bottom_alcove(const RootSystem& rs, const Weight& mu, Int p) {
  if (!rs.is_dominant(mu)) throw NotDominant("bottom alcove test for non-dominant " + mu.str());
  const Weight shifted = mu + rs.rho();
  for (std::size_t c = 0; c < rs.components().size(); ++c)
    if (rs.pair(shifted, rs.highest_short_root(static_cast<int>(c))) > p) return false;
  return true;
}

/// lambda in X(<=1): on each component at most one simple root a has
/// <lambda^1, a^v> < h - 2.
inline bool in_one_wall_region(const RootSystem& rs, const Weight& lambda, Int p) {
  if (!rs.is_dominant(lambda)) throw NotDominant("one-wall test for non-dominant " + lambda.str());
  const Weight high = split(lambda, p, 1).high;
  for (auto& comp : rs.components()) {
    int low_walls = 0;
    for (int i : comp.simple)
      if (high[i] < comp.coxeter - 2) ++low_walls;
    if (low_walls > 1) return false;
  }
  return true;
}

}  // namespace pfilt
