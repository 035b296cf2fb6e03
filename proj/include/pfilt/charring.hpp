#pragma once

/*
 * Formal characters: finitely supported Z-valued functions on the weight
 * lattice, i.e. elements of Z[X]. Products are convolutions, so the
 * character of a tensor product is the product of characters.
 *
 * Weyl characters chi(lambda) are computed with Freudenthal's recursion on
 * dominant weights and then spread over W-orbits. All arithmetic is exact.
 */

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfilt/rootsys.hpp"
#include "pfilt/weights.hpp"

namespace pfilt {

class FormalCharacter {
 public:
  using Map = std::unordered_map<Weight, Int, WeightHash>;
  using Entry = std::pair<Weight, Int>;

  FormalCharacter() = default;
  explicit FormalCharacter(SystemPtr sys) : sys_(std::move(sys)) {}

  static FormalCharacter monomial(SystemPtr sys, const Weight& w, Int coeff = 1) {
    FormalCharacter c(std::move(sys));
    c.add_term(w, coeff);
    return c;
  }
  static FormalCharacter one(SystemPtr sys) {
    Weight z = sys->zero();
    return monomial(std::move(sys), z);
  }

  const SystemPtr& system() const noexcept { return sys_; }
  const RootSystem& rs() const { return *sys_; }
  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Int operator[](const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Weight& w, Int coeff) {
    if (coeff == 0) return;
    if (sys_) sys_->check(w);
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Sum of multiplicities; negative for some virtual characters.
  Int dimension() const {
    Int d = 0;
    for (auto& [w, m] : terms_) d += m;
    return d;
  }

  bool nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](auto& e) { return e.second > 0; });
  }

  /// Entries in canonical order (decreasing order key, ties by decreasing
  /// lexicographic coordinates).
  std::vector<Entry> sorted() const {
    std::vector<Entry> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [this](const Entry& a, const Entry& b) { return sys_->canonical_before(a.first, b.first); });
    return out;
  }

  /// Largest weight in canonical order. Precondition: nonempty.
  Entry leading() const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (sys_->canonical_before(it->first, best->first)) best = it;
    return {best->first, best->second};
  }
  /// Smallest weight in canonical order. Precondition: nonempty.
  Entry trailing() const {
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
      if (sys_->canonical_before(best->first, it->first)) best = it;
    return {best->first, best->second};
  }

  /// Restriction to dominant weights.
  FormalCharacter dominant_part() const {
    FormalCharacter d(sys_);
    for (auto& [w, m] : terms_)
      if (sys_->is_dominant(w)) d.terms_.emplace(w, m);
    return d;
  }

  bool is_w_symmetric() const {
    for (auto& [w, m] : terms_)
      for (std::size_t i = 0; i < sys_->rank(); ++i)
        if ((*this)[sys_->reflect(w, i)] != m) return false;
    return true;
  }

  /// Multiplication by the monomial e^shift.
  FormalCharacter shifted(const Weight& shift) const {
    FormalCharacter out(sys_);
    out.terms_.reserve(terms_.size());
    for (auto& [w, m] : terms_) out.terms_.emplace(w + shift, m);
    return out;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) { return axpy(1, o); }
  FormalCharacter& operator-=(const FormalCharacter& o) { return axpy(-1, o); }

  /// this += k * o
  FormalCharacter& axpy(Int k, const FormalCharacter& o) {
    adopt(o);
    if (k == 0) return *this;
    for (auto& [w, m] : o.terms_) add_term(w, k * m);
    return *this;
  }

  FormalCharacter& operator*=(Int k) {
    if (k == 0) terms_.clear();
    for (auto& [w, m] : terms_) m *= k;
    return *this;
  }

  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(Int k, FormalCharacter a) { return a *= k; }
  friend FormalCharacter operator*(FormalCharacter a, Int k) { return a *= k; }

  /// Convolution product.
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    FormalCharacter out(a.sys_);
    out.adopt(b);
    const FormalCharacter& big = a.size() >= b.size() ? a : b;
    const FormalCharacter& small = a.size() >= b.size() ? b : a;
    out.terms_.reserve(big.size() * 2);
    for (auto& [ws, ms] : small.terms_)
      for (auto& [wb, mb] : big.terms_) out.add_term(ws + wb, ms * mb);
    return out;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.sys_ && b.sys_ && !same_system(*a.sys_, *b.sys_)) return false;
    return a.terms_ == b.terms_;
  }

  static bool same_system(const RootSystem& a, const RootSystem& b) {
    return &a == &b || (a.name() == b.name() && a.cartan() == b.cartan());
  }

 private:
  void adopt(const FormalCharacter& o) {
    if (!sys_) {
      sys_ = o.sys_;
    } else if (o.sys_ && !same_system(*sys_, *o.sys_)) {
      throw MismatchedSystem("characters over " + sys_->name() + " and " + o.sys_->name());
    }
  }

  SystemPtr sys_;
  Map terms_;
};

/// Multiplicities of the dominant weights of chi(lambda) (Freudenthal).
/// Returned in canonical (decreasing) order.
inline std::vector<std::pair<Weight, Int>> weyl_dominant_multiplicities(const RootSystem& rs,
                                                                         const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw NotDominant("Weyl character of non-dominant " + lambda.str());
  struct Node {
    Weight w;
    std::vector<Int> depth;  // lambda - w in simple root coordinates
    Int level = 0;
  };
  std::vector<Node> nodes{{lambda, std::vector<Int>(rs.rank(), 0), 0}};
  std::unordered_map<Weight, std::size_t, WeightHash> index{{lambda, 0}};
  // dominant weights below lambda are linked by subtracting positive roots
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (auto& beta : rs.positive_roots()) {
      Weight mu = nodes[k].w - beta.weight;
      if (!rs.is_dominant(mu) || index.count(mu)) continue;
      Node n{mu, nodes[k].depth, nodes[k].level};
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        n.depth[i] += beta.simple[i];
        n.level += beta.simple[i];
      }
      index.emplace(mu, nodes.size());
      nodes.push_back(std::move(n));
    }
  }
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const Node& a, const Node& b) { return a.level < b.level; });

  std::unordered_map<Weight, Int, WeightHash> mult{{lambda, 1}};
  const Weight lam_2rho = lambda + 2 * rs.rho();
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    const Weight& mu = nodes[k].w;
    Int num = 0;
    for (auto& beta : rs.positive_roots()) {
      Weight nu = mu;
      for (;;) {
        nu += beta.weight;
        auto it = mult.find(rs.dominant(nu));
        if (it == mult.end()) break;
        num += beta.half_norm * rs.pair(nu, beta) * it->second;
      }
    }
    num *= 2;
    const Int den = rs.form(nodes[k].depth, lam_2rho + mu);
    if (den <= 0 || num % den != 0)
      throw Error("internal: Freudenthal recursion not integral at " + mu.str());
    mult.emplace(mu, num / den);
  }
  std::vector<std::pair<Weight, Int>> out;
  out.reserve(nodes.size());
  for (auto& n : nodes) {
    Int m = mult.at(n.w);
    if (m != 0) out.emplace_back(n.w, m);
  }
  std::sort(out.begin(), out.end(),
            [&](auto& a, auto& b) { return rs.canonical_before(a.first, b.first); });
  return out;
}

/// Character with the given multiplicity on each dominant weight, extended
/// to be W-invariant.
inline FormalCharacter from_dominant(const SystemPtr& sys,
                                     const std::vector<std::pair<Weight, Int>>& dominant) {
  FormalCharacter c(sys);
  for (auto& [w, m] : dominant)
    for (auto& x : sys->weyl_orbit(w)) c.add_term(x, m);
  return c;
}

/// Weyl character chi(lambda) = ch nabla(lambda).
inline FormalCharacter weyl_character(const SystemPtr& sys, const Weight& lambda) {
  return from_dominant(sys, weyl_dominant_multiplicities(*sys, lambda));
}

/// Alternating sum of the characters of R^i Ind_B^G(mu): sign * chi(nu)
/// where nu is the dot-dominant representative, or 0 if mu is singular.
inline FormalCharacter euler_character(const SystemPtr& sys, const Weight& mu) {
  auto d = dot_dominantize(*sys, mu);
  if (d.sign == 0) return FormalCharacter(sys);
  return weyl_character(sys, d.weight) * d.sign;
}

/// Frobenius twist: every weight scaled by p^n.
inline FormalCharacter frobenius_twist(const FormalCharacter& c, Int p, int n) {
  if (n == 0) return c;
  const Int q = ipow(p, n);
  FormalCharacter out(c.system());
  for (auto& [w, m] : c.terms()) out.add_term(w * q, m);
  return out;
}

/// ch St_n = chi((p^n - 1) rho).
inline FormalCharacter steinberg_character(const SystemPtr& sys, Int p, int n = 1) {
  if (n < 0) throw Error("Steinberg character needs n >= 0");
  return weyl_character(sys, (ipow(p, n) - 1) * sys->rho());
}

/// Weyl dimension formula prod_{beta > 0} <lambda + rho, beta^v> / <rho, beta^v>.
inline Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw NotDominant("Weyl dimension of non-dominant " + lambda.str());
  const Weight shifted = lambda + rs.rho();
  // accumulate as a reduced fraction to stay exact
  Int num = 1, den = 1;
  for (auto& beta : rs.positive_roots()) {
    const Int f = rs.pair(shifted, beta);
    const Int g0 = std::gcd(f, den);
    if (__builtin_mul_overflow(num, f / g0, &num)) throw Error("Weyl dimension overflows 64 bits");
    den = den / g0 * beta.coroot_height;
    Int g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw Error("internal: Weyl dimension not integral");
  return num;
}

/// Coefficients of a W-symmetric character in the basis {chi(lambda)}, by
/// repeated elimination of the highest dominant weight. Canonical order.
inline std::vector<std::pair<Weight, Int>> weyl_expansion(const FormalCharacter& c) {
  const RootSystem& rs = c.rs();
  FormalCharacter rest = c.dominant_part();
  std::vector<std::pair<Weight, Int>> out;
  while (!rest.empty()) {
    auto [top, coeff] = rest.leading();
    out.emplace_back(top, coeff);
    for (auto& [w, m] : weyl_dominant_multiplicities(rs, top)) rest.add_term(w, -coeff * m);
  }
  return out;
}

/// Exact quotient q with q * d = c, by leading term elimination in the
/// canonical monomial order. Throws NotDivisible if no such q exists.
/// Precondition: c and d are W-symmetric and d is nonzero.
inline FormalCharacter divide_by(const FormalCharacter& c, const FormalCharacter& d) {
  if (d.empty()) throw NotDivisible("division by the zero character");
  if (c.system() && d.system() && !FormalCharacter::same_system(c.rs(), d.rs()))
    throw MismatchedSystem("characters over " + c.rs().name() + " and " + d.rs().name());
  const RootSystem& rs = d.rs();
  FormalCharacter quotient(d.system());
  if (c.empty()) return quotient;
  auto [dtop, dcoef] = d.leading();
  FormalCharacter rest = c;
  const Weight qtop = rest.leading().first - dtop;
  // every weight of a W-symmetric quotient lies below its highest weight
  const Int bound = rs.order_key(rs.dominant(qtop));
  while (!rest.empty()) {
    auto [top, coeff] = rest.leading();
    if (coeff % dcoef != 0)
      throw NotDivisible("leading coefficient " + std::to_string(coeff) + " at " + top.str() +
                         " is not a multiple of " + std::to_string(dcoef));
    Weight t = top - dtop;
    if (rs.order_key(rs.dominant(t)) > bound)
      throw NotDivisible("remainder term " + top.str() + " falls outside the quotient's hull");
    const Int k = coeff / dcoef;
    quotient.add_term(t, k);
    for (auto& [w, m] : d.terms()) rest.add_term(w + t, -k * m);
  }
  return quotient;
}

}  // namespace pfilt
