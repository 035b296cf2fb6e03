#pragma once

// Baby Verma modules Z^_1(lambda) at the level of characters: their
// composition factors L^_1(mu) = L(mu^0) (x) p mu^1, the set I_lambda and the
// height bound h_lambda derived from them.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pfilt/charring.hpp"
#include "pfilt/simples.hpp"
#include "pfilt/weights.hpp"

namespace pfilt {

struct G1BFactor {
  Weight weight;  // highest weight mu = mu0 + p mu1
  Weight mu0;
  Weight mu1;
  Int mult = 0;
  friend bool operator==(const G1BFactor&, const G1BFactor&) = default;
};

struct G1BFactorList {
  Weight lambda;
  Int p = 0;
  std::vector<G1BFactor> factors;  // canonical order of weight
};

/// ch Z^_1(lambda) = ch St * e^{lambda - (p-1) rho}.
inline FormalCharacter zhat_character(const SystemPtr& sys, const Weight& lambda, Int p) {
  return steinberg_character(sys, p, 1).shifted(lambda - (p - 1) * sys->rho());
}

/// Composition multiplicities of Z^_1(lambda) by greedy elimination of a
/// maximal remaining weight. Throws SimpleCharUnavailable when ch L(mu0) is
/// undetermined for some digit that occurs.
inline G1BFactorList decompose(const Weight& lambda, SimpleCharacters& simples) {
  const SystemPtr& sys = simples.system();
  const Int p = simples.p();
  sys->check(lambda);
  G1BFactorList out{lambda, p, {}};
  FormalCharacter rest = zhat_character(sys, lambda, p);
  while (!rest.empty()) {
    auto [top, coeff] = rest.leading();
    if (coeff <= 0)
      throw NegativeRemainder("decomposing Z^_1" + lambda.str() + ": coefficient " +
                              std::to_string(coeff) + " at " + top.str());
    auto s = split(top, p, 1);
    const FormalCharacter* l = simples.simple(s.low);
    if (!l)
      throw SimpleCharUnavailable("ch L" + s.low.str() + " is undetermined (" +
                                  simples.reason(s.low) + ")");
    rest.axpy(-coeff, l->shifted(p * s.high));
    out.factors.push_back({top, s.low, s.high, coeff});
  }
  return out;
}

/// Character reassembled from a factor list:
/// sum mult * ch L(mu0) * e^{p mu1}.
inline FormalCharacter reassemble(const G1BFactorList& list, SimpleCharacters& simples) {
  FormalCharacter c(simples.system());
  for (auto& f : list.factors) {
    const FormalCharacter* l = simples.simple(f.mu0);
    if (!l) throw SimpleCharUnavailable("ch L" + f.mu0.str() + " is undetermined");
    c.axpy(f.mult, l->shifted(list.p * f.mu1));
  }
  return c;
}

/// Simple roots a with <mu1, a^v> < -1 for some factor, as sorted indices.
inline std::vector<int> I_lambda(const G1BFactorList& list) {
  std::set<int> out;
  for (auto& f : list.factors)
    for (std::size_t i = 0; i < f.mu1.size(); ++i)
      if (f.mu1[i] < -1) out.insert(static_cast<int>(i));
  return {out.begin(), out.end()};
}

/// h_J = <rho, a_J^v> for a connected set J of simple roots, a_J the highest
/// short root of R_J.
inline Int h_J(const RootSystem& rs, const std::vector<int>& J) {
  auto sub = rs.subsystem(J);
  if (!sub->irreducible()) throw Error("h_J requested for a disconnected set of simple roots");
  return sub->highest_short_root().coroot_height;
}

/// max { h_J : J connected subset of I } + 1, with the empty maximum taken as 0.
/// h_J grows with J, so the maximum is attained on connected components.
inline Int h_lambda(const RootSystem& rs, const std::vector<int>& I) {
  Int best = 0;
  for (auto& comp : rs.connected_components(I)) best = std::max(best, h_J(rs, comp));
  return best + 1;
}

/// The highest short root a_J of R_J for connected J, as a root of rs.
inline const Root& highest_short_root_of(const RootSystem& rs, const std::vector<int>& J) {
  auto sub = rs.subsystem(J);
  if (!sub->irreducible()) throw Error("a_J requested for a disconnected set of simple roots");
  const Root& a = sub->highest_short_root();
  std::vector<Int> c(rs.rank(), 0);
  for (std::size_t k = 0; k < J.size(); ++k) c[J[k]] = a.simple[k];
  const int idx = rs.find_root(c);
  if (idx < 0) throw InvariantViolation("a_J is not a root of the ambient system");
  return rs.positive_roots()[idx];
}

/// Connected subsets of I (at most 2^|I| candidates; |I| <= rank).
inline std::vector<std::vector<int>> connected_subsets(const RootSystem& rs, const std::vector<int>& I) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << I.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < I.size(); ++k)
      if (mask >> k & 1) J.push_back(I[k]);
    if (rs.connected_components(J).size() == 1) out.push_back(std::move(J));
  }
  return out;
}

struct LeviAlcoveViolation {
  Weight mu;
  std::vector<int> J;
  Int value = 0;  // <mu1 + rho, a_J^v>
};

/// Factors that survive induction to the parabolic of I_lambda
/// (<mu1, a^v> >= 0 for a in I_lambda) yet have <mu1 + rho, a_J^v> > p for
/// some connected J in I_lambda. Empty whenever p >= (h-2) h_lambda.
inline std::vector<LeviAlcoveViolation> levi_alcove_violations(const RootSystem& rs,
                                                              const G1BFactorList& list) {
  std::vector<LeviAlcoveViolation> out;
  const std::vector<int> I = I_lambda(list);
  const auto subsets = connected_subsets(rs, I);
  std::vector<const Root*> tops;
  for (auto& J : subsets) tops.push_back(&highest_short_root_of(rs, J));
  for (auto& f : list.factors) {
    if (std::any_of(I.begin(), I.end(), [&](int a) { return f.mu1[a] < 0; })) continue;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      const Int v = rs.pair(f.mu1 + rs.rho(), *tops[k]);
      if (v > list.p) out.push_back({f.weight, subsets[k], v});
    }
  }
  return out;
}

struct WeightEstimateViolation {
  Weight mu;
  std::size_t root = 0;  // index into positive_roots()
  Int value = 0;         // <mu1, beta^v>
  Int lower = 0;
  Int upper = 0;
};

struct WeightEstimateReport {
  std::vector<WeightEstimateViolation> violations;
  Int steinberg_max = 0;    // max |<nu, beta^v>| over weights nu of St and beta > 0
  Int steinberg_bound = 0;  // (p-1)(h-1), maximum over components
  bool steinberg_ok = true;
  bool ok() const { return violations.empty() && steinberg_ok; }
};

/// Checks, for every factor mu and every positive root beta (h the Coxeter
/// number of beta's component),
///   <lambda1, beta^v> - ht(beta^v) - h + 2 <= <mu1, beta^v> <= <lambda1, beta^v> + h - 2,
/// and |<nu, beta^v>| <= (p-1)(h-1) for every weight nu of St.
inline WeightEstimateReport check_weight_estimates(const RootSystem& rs, const G1BFactorList& list,
                                                   const FormalCharacter& steinberg) {
  WeightEstimateReport rep;
  const Weight lam1 = split(list.lambda, list.p, 1).high;
  const auto& roots = rs.positive_roots();
  for (auto& f : list.factors) {
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Int h = rs.components()[roots[k].component].coxeter;
      const Int l = rs.pair(lam1, roots[k]);
      const Int v = rs.pair(f.mu1, roots[k]);
      const Int lo = l - roots[k].coroot_height - h + 2;
      const Int hi = l + h - 2;
      if (v < lo || v > hi) rep.violations.push_back({f.weight, k, v, lo, hi});
    }
  }
  for (auto& [nu, m] : steinberg.terms()) {
    for (auto& beta : roots) {
      const Int h = rs.components()[beta.component].coxeter;
      const Int v = std::abs(rs.pair(nu, beta));
      rep.steinberg_max = std::max(rep.steinberg_max, v);
      if (v > (list.p - 1) * (h - 1)) rep.steinberg_ok = false;
    }
  }
  for (auto& c : rs.components()) rep.steinberg_bound = std::max(rep.steinberg_bound, (list.p - 1) * (c.coxeter - 1));
  return rep;
}

}  // namespace pfilt
