#pragma once

/*
 * Criteria for nabla(lambda) to have a p-filtration and character-level
 * filtration certificates.
 *
 * A certificate at level n is a list of lines (mu0, mu1, m) with mu0 in X_n,
 * mu1 dominant, such that
 *
 *     sum m * ch L(mu0) * chi(mu1)^[p^n] = chi(lambda).
 *
 * The products ch L(mu0) chi(mu1)^[p^n] are linearly independent (distinct
 * highest weights mu0 + p^n mu1), so the lines are the unique expansion of
 * chi(lambda) in that basis. A p^n-filtration can only exist if every m is
 * nonnegative; characters cannot prove that it does exist.
 *
 * At level 1 the lines come from inducing a G1B composition series of
 * Z^_1(lambda): each factor L^_1(mu) contributes its Euler characteristic
 * ch L(mu0) * (sign * chi(nu))^[p], where (sign, nu) is the dot-dominant form
 * of mu1.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfilt/charring.hpp"
#include "pfilt/g1b.hpp"
#include "pfilt/simples.hpp"
#include "pfilt/weights.hpp"

namespace pfilt {

/// Criterion that guarantees a filtration, in reporting priority order.
enum class Flag { None, Good, Small, Large, OneWall, MainBound, GlobalBound };

inline const char* to_string(Flag f) {
  switch (f) {
    case Flag::None: return "";
    case Flag::Good: return "good";
    case Flag::Small: return "small";
    case Flag::Large: return "large";
    case Flag::OneWall: return "one_wall";
    case Flag::MainBound: return "main_bound";
    case Flag::GlobalBound: return "global_bound";
  }
  return "";
}

inline Flag flag_from_string(const std::string& s) {
  for (Flag f : {Flag::Good, Flag::Small, Flag::Large, Flag::OneWall, Flag::MainBound,
                 Flag::GlobalBound})
    if (s == to_string(f)) return f;
  if (s.empty()) return Flag::None;
  throw SchemaError("unknown criterion flag '" + s + "'");
}

struct CriteriaReport {
  Weight lambda;
  Int p = 0;
  bool small = false;
  bool large = false;
  bool main_bound = false;
  bool one_wall = false;
  bool global_bound = false;
  bool factors_available = false;  // main_bound needs the G1B factors
  std::vector<int> I;              // I_lambda
  Int h_lambda = 0;                // largest over components
  Int h = 0;                       // largest Coxeter number over components

  /// Highest-priority flag that holds.
  Flag best() const {
    if (small) return Flag::Small;
    if (large) return Flag::Large;
    if (one_wall) return Flag::OneWall;
    if (main_bound) return Flag::MainBound;
    if (global_bound) return Flag::GlobalBound;
    return Flag::None;
  }
};

/// Evaluates every criterion. For reducible systems a flag holds when it
/// holds on every irreducible component. `factors` may be null, in which
/// case main_bound is reported false.
inline CriteriaReport criteria(const RootSystem& rs, const Weight& lambda, Int p,
                               const G1BFactorList* factors = nullptr) {
  if (!rs.is_dominant(lambda)) throw NotDominant("criteria for non-dominant " + lambda.str());
  CriteriaReport r;
  r.lambda = lambda;
  r.p = p;
  const Weight lam1 = split(lambda, p, 1).high;
  r.small = r.large = r.global_bound = true;
  r.one_wall = in_one_wall_region(rs, lambda, p);
  for (std::size_t c = 0; c < rs.components().size(); ++c) {
    auto& comp = rs.components()[c];
    const Int h = comp.coxeter;
    r.h = std::max(r.h, h);
    if (rs.pair(lam1, rs.highest_short_root(static_cast<int>(c))) > p - 2 * h + 3) r.small = false;
    for (int i : comp.simple)
      if (lambda[i] < p * (h - 2)) r.large = false;
    if (p < (h - 2) * h) r.global_bound = false;
    if (p < 2 * (h - 2)) r.one_wall = false;
  }
  if (factors) {
    r.factors_available = true;
    r.I = I_lambda(*factors);
    r.main_bound = true;
    for (auto& comp : rs.components()) {
      std::vector<int> part;
      for (int i : r.I)
        if (std::find(comp.simple.begin(), comp.simple.end(), i) != comp.simple.end())
          part.push_back(i);
      const Int hl = h_lambda(rs, part);
      r.h_lambda = std::max(r.h_lambda, hl);
      if (p < (comp.coxeter - 2) * hl) r.main_bound = false;
    }
  }
  return r;
}

enum class CertStatus { Failed, Unknown, CharConsistent, Guaranteed };

struct CertLine {
  Weight mu0;
  Weight mu1;
  Int mult = 0;
  friend bool operator==(const CertLine&, const CertLine&) = default;
};

struct Certificate {
  Weight lambda;
  Int p = 0;
  int n = 1;
  CertStatus status = CertStatus::Unknown;
  Flag flag = Flag::None;  // set when status is Guaranteed
  std::vector<CertLine> lines;
  std::string note;

  std::string status_string() const {
    switch (status) {
      case CertStatus::Guaranteed: return std::string("GUARANTEED:") + to_string(flag);
      case CertStatus::CharConsistent: return "CHAR_CONSISTENT";
      case CertStatus::Unknown: return "UNKNOWN";
      case CertStatus::Failed: return "FAILED";
    }
    return "UNKNOWN";
  }

  bool nonnegative() const {
    return std::all_of(lines.begin(), lines.end(), [](auto& l) { return l.mult >= 0; });
  }
};

inline void parse_status(const std::string& s, Certificate& c) {
  const std::string g = "GUARANTEED:";
  if (s.rfind(g, 0) == 0) {
    c.status = CertStatus::Guaranteed;
    c.flag = flag_from_string(s.substr(g.size()));
  } else if (s == "CHAR_CONSISTENT") {
    c.status = CertStatus::CharConsistent;
  } else if (s == "UNKNOWN") {
    c.status = CertStatus::Unknown;
  } else if (s == "FAILED") {
    c.status = CertStatus::Failed;
  } else {
    throw SchemaError("unknown certificate status '" + s + "'");
  }
}

/// Merge equal (mu0, mu1), drop zero lines and sort canonically by
/// mu0 + p^n mu1.
inline void normalize_lines(const RootSystem& rs, Certificate& cert) {
  const Int q = ipow(cert.p, cert.n);
  std::map<std::pair<Weight, Weight>, Int> acc;
  for (auto& l : cert.lines) acc[{l.mu0, l.mu1}] += l.mult;
  cert.lines.clear();
  for (auto& [k, m] : acc)
    if (m != 0) cert.lines.push_back({k.first, k.second, m});
  std::sort(cert.lines.begin(), cert.lines.end(), [&](const CertLine& a, const CertLine& b) {
    const Weight wa = a.mu0 + q * a.mu1, wb = b.mu0 + q * b.mu1;
    if (wa != wb) return rs.canonical_before(wa, wb);
    return b.mu0 < a.mu0;
  });
}

/// Status assignment shared by certify and refine: negative lines fail,
/// otherwise a guaranteed flag wins over plain character consistency.
inline void assign_status(Certificate& cert, Flag flag) {
  if (!cert.nonnegative()) {
    cert.status = CertStatus::Failed;
    cert.flag = Flag::None;
    if (flag != Flag::None)
      cert.note = std::string("negative line although criterion '") + to_string(flag) + "' holds";
  } else if (flag != Flag::None) {
    cert.status = CertStatus::Guaranteed;
    cert.flag = flag;
  } else {
    cert.status = CertStatus::CharConsistent;
    cert.flag = Flag::None;
  }
}

/// The trivial level-0 certificate: nabla(lambda) is its own good filtration.
inline Certificate good_filtration_certificate(const RootSystem& rs, const Weight& lambda, Int p) {
  if (!rs.is_dominant(lambda)) throw NotDominant("certificate for non-dominant " + lambda.str());
  Certificate c{lambda, p, 0, CertStatus::Guaranteed, Flag::Good, {{rs.zero(), lambda, 1}}, ""};
  return c;
}

/// Level-1 certificate from a G1B composition series of Z^_1(lambda).
inline Certificate certify(const Weight& lambda, SimpleCharacters& simples,
                           CriteriaReport* report = nullptr) {
  const RootSystem& rs = *simples.system();
  const Int p = simples.p();
  if (!rs.is_dominant(lambda)) throw NotDominant("certificate for non-dominant " + lambda.str());
  Certificate cert{lambda, p, 1, CertStatus::Unknown, Flag::None, {}, ""};
  std::optional<G1BFactorList> factors;
  try {
    factors = decompose(lambda, simples);
  } catch (const SimpleCharUnavailable& e) {
    cert.note = e.what();
  }
  CriteriaReport crit = criteria(rs, lambda, p, factors ? &*factors : nullptr);
  if (report) *report = crit;
  if (!factors) return cert;
  for (auto& f : factors->factors) {
    auto d = dot_dominantize(rs, f.mu1);
    if (d.sign == 0) continue;
    cert.lines.push_back({f.mu0, d.weight, d.sign * f.mult});
  }
  normalize_lines(rs, cert);
  assign_status(cert, crit.best());
  return cert;
}

/// sum m ch L(mu0) chi(mu1)^[p^n]; nullopt if a simple character is
/// undetermined.
inline std::optional<FormalCharacter> certificate_character(const Certificate& cert,
                                                            SimpleCharacters& simples) {
  FormalCharacter total(simples.system());
  for (auto& l : cert.lines) {
    const FormalCharacter* s = simples.simple(l.mu0);
    if (!s) return std::nullopt;
    total.axpy(l.mult, *s * frobenius_twist(simples.weyl(l.mu1), cert.p, cert.n));
  }
  return total;
}

/// The Euler identity sum m ch L(mu0) chi(mu1)^[p^n] = chi(lambda).
inline bool euler_identity(const Certificate& cert, SimpleCharacters& simples) {
  auto c = certificate_character(cert, simples);
  return c && *c == simples.weyl(cert.lambda);
}

namespace detail {
inline int flag_rank(Flag f) {
  switch (f) {
    case Flag::Good: return 6;
    case Flag::Small: return 5;
    case Flag::Large: return 4;
    case Flag::OneWall: return 3;
    case Flag::MainBound: return 2;
    case Flag::GlobalBound: return 1;
    case Flag::None: return 0;
  }
  return 0;
}
}  // namespace detail

/// Refines a level-n certificate to level target_n: each line
/// (mu0, mu1, m) is replaced by the lines (mu0 + p^n nu0, nu1, m m') of the
/// level-1 certificate (nu0, nu1, m') of mu1. The result carries the weakest
/// status among the input and all sub-certificates.
inline Certificate refine(const Certificate& cert, int target_n, SimpleCharacters& simples) {
  if (cert.status == CertStatus::Failed || cert.status == CertStatus::Unknown)
    throw Error("cannot refine a " + cert.status_string() + " certificate");
  if (target_n < cert.n) throw Error("refinement target below the certificate level");
  const RootSystem& rs = *simples.system();
  Certificate cur = cert;
  std::map<Weight, Certificate> sub;
  while (cur.n < target_n) {
    const Int q = ipow(cur.p, cur.n);
    Certificate next{cur.lambda, cur.p, cur.n + 1, cur.status, cur.flag, {}, cur.note};
    CertStatus status = cur.status;
    Flag flag = cur.flag;
    for (auto& line : cur.lines) {
      auto it = sub.find(line.mu1);
      if (it == sub.end()) it = sub.emplace(line.mu1, certify(line.mu1, simples)).first;
      const Certificate& s = it->second;
      if (static_cast<int>(s.status) < static_cast<int>(status)) status = s.status;
      if (s.status == CertStatus::Guaranteed && detail::flag_rank(s.flag) < detail::flag_rank(flag))
        flag = s.flag;
      if (s.status == CertStatus::Unknown && next.note.empty())
        next.note = "sub-certificate for " + line.mu1.str() + ": " + s.note;
      for (auto& l : s.lines) next.lines.push_back({line.mu0 + q * l.mu0, l.mu1, line.mult * l.mult});
    }
    normalize_lines(rs, next);
    if (status == CertStatus::Unknown) {
      next.status = CertStatus::Unknown;
      next.flag = Flag::None;
    } else if (status == CertStatus::Failed || !next.nonnegative()) {
      next.status = CertStatus::Failed;
      next.flag = Flag::None;
    } else if (status == CertStatus::CharConsistent) {
      next.status = CertStatus::CharConsistent;
      next.flag = Flag::None;
    } else {
      next.status = CertStatus::Guaranteed;
      next.flag = flag;
    }
    cur = std::move(next);
    if (cur.status == CertStatus::Unknown || cur.status == CertStatus::Failed) {
      // the level stays where it broke; further refinement is meaningless
      break;
    }
  }
  return cur;
}

struct DivisibilityReport {
  bool divisible = false;
  std::optional<FormalCharacter> quotient;
  /// ch St_n^{(x)3} - ch St_n in the Weyl basis has no negative coefficient.
  bool summand_ok = false;
  Int steinberg_coefficient = 0;  // coefficient of chi((p^n-1) rho) in ch St_n^{(x)3}
};

/// Is c a character multiple of ch St_n, and does ch St_n occur in
/// ch St_n^{(x)3} with the remaining Weyl coefficients nonnegative?
inline DivisibilityReport divisibility_report(const FormalCharacter& c, Int p, int n,
                                              bool check_summand = true) {
  const SystemPtr& sys = c.system();
  DivisibilityReport rep;
  const FormalCharacter st = steinberg_character(sys, p, n);
  try {
    rep.quotient = divide_by(c, st);
    rep.divisible = true;
  } catch (const NotDivisible&) {
    rep.divisible = false;
  }
  if (check_summand) {
    const Weight top = (ipow(p, n) - 1) * sys->rho();
    rep.summand_ok = true;
    for (auto& [w, coeff] : weyl_expansion(st * st * st)) {
      if (w == top) rep.steinberg_coefficient = coeff;
      const Int rest = coeff - (w == top ? 1 : 0);
      if (rest < 0) rep.summand_ok = false;
    }
    if (rep.steinberg_coefficient < 1) rep.summand_ok = false;
  }
  return rep;
}

/// Character identity
///   (ch L(l0) chi(l1)^[p^m])^[p^n] * ch St_n = ch L((p^n-1) rho + p^n l0) * chi(l1)^[p^(n+m)]
/// where lambda = l0 + p^m l1 with l0 in X_m. Throws SimpleCharUnavailable
/// if a simple character is undetermined.
inline bool steinberg_component_identity(const Weight& lambda, int m, int n,
                                         SimpleCharacters& simples) {
  const SystemPtr& sys = simples.system();
  const Int p = simples.p();
  if (!sys->is_dominant(lambda)) throw NotDominant("identity for non-dominant " + lambda.str());
  auto s = split(lambda, p, m);
  auto need = [&](const Weight& w) -> const FormalCharacter& {
    const FormalCharacter* c = simples.simple(w);
    if (!c) throw SimpleCharUnavailable("ch L" + w.str() + " is undetermined");
    return *c;
  };
  const FormalCharacter& chi1 = simples.weyl(s.high);
  const FormalCharacter lhs =
      frobenius_twist(need(s.low) * frobenius_twist(chi1, p, m), p, n) *
      steinberg_character(sys, p, n);
  const Weight top = (ipow(p, n) - 1) * sys->rho() + ipow(p, n) * s.low;
  const FormalCharacter rhs = need(top) * frobenius_twist(chi1, p, n + m);
  return lhs == rhs;
}

}  // namespace pfilt
