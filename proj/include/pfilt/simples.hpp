#pragma once

/*
 * Characters of the simple modules L(lambda).
 *
 * For dominant lambda = sum_k p^k d_k with restricted digits d_k, Steinberg's
 * tensor product theorem gives ch L(lambda) = prod_k ch L(d_k)^[p^k]. A
 * restricted digit is resolved, in this order, by
 *
 *   1. the bottom alcove (nabla(lambda) is simple there),
 *   2. an ingested decomposition table,
 *   3. Jantzen's sum formula
 *        sum_{i>0} ch V(lambda)^i
 *          = sum_{beta>0} sum_{0 < mp < <lambda+rho,beta^v>} v_p(mp) chi(s_{beta,mp} . lambda),
 *      solved top-down in the basis {ch L(mu)}.
 *
 * The sum formula coefficient j_mu bounds the decomposition number:
 * j_mu = 0 gives [chi(lambda):L(mu)] = 0, and j_mu > 0 gives
 * 1 <= [chi(lambda):L(mu)] <= j_mu. When some j_mu >= 2 every admissible
 * choice is tried; a choice survives if the resulting ch L(lambda) has
 * nonnegative multiplicities. If more than one survives the weight is
 * reported AMBIGUOUS and nothing is guessed.
 */

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfilt/charring.hpp"
#include "pfilt/rootsys.hpp"
#include "pfilt/weights.hpp"

namespace pfilt {

/// COMPUTED rows come from the solver, DERIVED rows are solver output that
/// passed the dimension cross-check, INGESTED rows are user supplied. On
/// conflict the later kind wins.
enum class Provenance { Computed, Derived, Ingested };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "COMPUTED";
    case Provenance::Derived: return "DERIVED";
    default: return "INGESTED";
  }
}

/// One row [chi(lambda) : L(mu)] of a decomposition matrix.
struct DecompRow {
  Weight lambda;
  std::vector<std::pair<Weight, Int>> factors;  // canonical order, includes (lambda, 1)
  Provenance provenance = Provenance::Computed;

  friend bool operator==(const DecompRow&, const DecompRow&) = default;
};

/// Decomposition numbers for restricted weights of one (system, p).
class DecompTable {
 public:
  DecompTable() = default;
  DecompTable(SystemPtr sys, Int p) : sys_(std::move(sys)), p_(p) {}

  const SystemPtr& system() const noexcept { return sys_; }
  Int p() const noexcept { return p_; }
  const std::map<Weight, DecompRow>& rows() const noexcept { return rows_; }
  const std::set<Weight>& ambiguous() const noexcept { return ambiguous_; }
  std::size_t size() const noexcept { return rows_.size(); }

  const DecompRow* find(const Weight& lambda) const {
    auto it = rows_.find(lambda);
    return it == rows_.end() ? nullptr : &it->second;
  }

  /// Throws InvariantViolation unless the row is unitriangular with
  /// nonnegative entries below lambda in the root order.
  void validate(const DecompRow& row) const {
    const RootSystem& rs = *sys_;
    auto fail = [&](const std::string& why) {
      throw InvariantViolation("row " + row.lambda.str() + ": " + why);
    };
    if (row.lambda.size() != rs.rank()) fail("wrong rank");
    if (!is_restricted(row.lambda, p_)) fail("lambda is not restricted");
    bool diagonal = false;
    std::set<Weight> seen;
    for (auto& [mu, m] : row.factors) {
      if (mu.size() != rs.rank()) fail("factor of wrong rank");
      if (!seen.insert(mu).second) fail("duplicate factor " + mu.str());
      if (m < 0) fail("negative multiplicity at " + mu.str());
      if (!rs.is_dominant(mu)) fail("non-dominant factor " + mu.str());
      if (!rs.leq(mu, row.lambda)) fail("factor " + mu.str() + " is not below lambda");
      if (mu == row.lambda) {
        if (m != 1) fail("diagonal entry is not 1");
        diagonal = true;
      }
    }
    if (!diagonal) fail("missing diagonal entry");
  }

  void insert(DecompRow row) {
    validate(row);
    std::sort(row.factors.begin(), row.factors.end(),
              [&](auto& a, auto& b) { return sys_->canonical_before(a.first, b.first); });
    ambiguous_.erase(row.lambda);
    rows_.insert_or_assign(row.lambda, std::move(row));
  }

  void mark_ambiguous(const Weight& lambda) {
    if (!rows_.count(lambda)) ambiguous_.insert(lambda);
  }

  /// Merge another table in. On conflict the row with the stronger
  /// provenance wins, `other` on a tie; conflicting entries are described in
  /// `conflicts`.
  void merge(const DecompTable& other, std::vector<std::string>* conflicts = nullptr) {
    if (!FormalCharacter::same_system(*sys_, *other.sys_) || p_ != other.p_)
      throw MismatchedSystem("cannot merge tables for different systems or primes");
    for (auto& [lambda, row] : other.rows_) {
      auto it = rows_.find(lambda);
      if (it == rows_.end()) {
        insert(row);
        continue;
      }
      if (it->second.factors == row.factors) {
        it->second.provenance = std::max(it->second.provenance, row.provenance);
        continue;
      }
      if (conflicts) conflicts->push_back("conflicting rows for " + lambda.str());
      if (row.provenance >= it->second.provenance) insert(row);
    }
    for (auto& w : other.ambiguous_) mark_ambiguous(w);
  }

 private:
  SystemPtr sys_;
  Int p_ = 0;
  std::map<Weight, DecompRow> rows_;
  std::set<Weight> ambiguous_;
};

enum class SimpleStatus { Exact, Ambiguous };

struct SimpleCharResult {
  FormalCharacter character;  // empty when ambiguous
  SimpleStatus status = SimpleStatus::Exact;
  std::string notes;
};

/// p-adic valuation of a positive integer.
inline int p_valuation(Int x, Int p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// The virtual character given by the right hand side of Jantzen's sum
/// formula for V(lambda), as a combination of Weyl characters indexed by
/// dominant weights (canonical order, zero coefficients dropped).
inline std::vector<std::pair<Weight, Int>> jantzen_sum(const RootSystem& rs, const Weight& lambda,
                                                        Int p) {
  if (!rs.is_dominant(lambda)) throw NotDominant("sum formula for non-dominant " + lambda.str());
  std::map<Weight, Int> acc;
  const Weight shifted = lambda + rs.rho();
  for (auto& beta : rs.positive_roots()) {
    const Int top = rs.pair(shifted, beta);
    for (Int mp = p; mp < top; mp += p) {
      const int v = p_valuation(mp, p);
      // s_{beta,mp} . lambda = lambda - (<lambda+rho, beta^v> - mp) beta
      Weight reflected = lambda - (top - mp) * beta.weight;
      auto d = dot_dominantize(rs, reflected);
      if (d.sign == 0) continue;
      acc[d.weight] += d.sign * v;
    }
  }
  std::vector<std::pair<Weight, Int>> out;
  for (auto& [w, c] : acc)
    if (c != 0) out.emplace_back(w, c);
  std::sort(out.begin(), out.end(),
            [&](auto& a, auto& b) { return rs.canonical_before(a.first, b.first); });
  return out;
}

/// Simple characters for one (system, p), memoised. Not thread-safe; use one
/// instance per thread (they can share an immutable DecompTable).
class SimpleCharacters {
 public:
  /// Upper limit on the number of candidate decomposition vectors examined
  /// for one weight before giving up as ambiguous.
  static constexpr std::size_t kCandidateLimit = 1u << 14;

  SimpleCharacters(SystemPtr sys, Int p, bool use_solver = true)
      : sys_(std::move(sys)), p_(p), table_(sys_, p), use_solver_(use_solver) {
    if (p < 2) throw Error("p must be a prime >= 2");
    for (Int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error("p = " + std::to_string(p) + " is not prime");
  }

  const SystemPtr& system() const noexcept { return sys_; }
  Int p() const noexcept { return p_; }
  const DecompTable& table() const noexcept { return table_; }

  /// Merge decomposition data; stronger provenance wins on conflict.
  void ingest(const DecompTable& t, std::vector<std::string>* conflicts = nullptr) {
    if (t.p() != p_) throw MismatchedSystem("table for p=" + std::to_string(t.p()));
    table_.merge(t, conflicts);
    simple_.clear();
    dominant_.clear();
  }

  /// Cached Weyl character.
  const FormalCharacter& weyl(const Weight& lambda) {
    auto it = weyl_.find(lambda);
    if (it == weyl_.end()) it = weyl_.emplace(lambda, weyl_character(sys_, lambda)).first;
    return it->second;
  }

  SimpleCharResult simple_character(const Weight& lambda) {
    if (!sys_->is_dominant(lambda))
      throw NotDominant("simple character of non-dominant " + lambda.str());
    const FormalCharacter* c = simple(lambda);
    if (!c) return {FormalCharacter(sys_), SimpleStatus::Ambiguous, "undetermined: " + why_[lambda]};
    return {*c, SimpleStatus::Exact, ""};
  }

  /// ch L(lambda), or nullptr when it cannot be pinned down.
  const FormalCharacter* simple(const Weight& lambda) {
    auto it = simple_.find(lambda);
    if (it != simple_.end()) return it->second ? &*it->second : nullptr;
    std::optional<FormalCharacter> result;
    if (is_restricted(lambda, p_)) {
      result = restricted(lambda);
    } else {
      result = FormalCharacter::one(sys_);
      Int scale = 1;
      for (auto& digit : padic_digits(lambda, p_)) {
        const FormalCharacter* d = simple(digit);
        if (!d) {
          why_[lambda] = "digit " + digit.str() + " undetermined";
          result.reset();
          break;
        }
        FormalCharacter twisted(sys_);
        for (auto& [w, m] : d->terms()) twisted.add_term(w * scale, m);
        *result = *result * twisted;
        scale *= p_;
      }
    }
    it = simple_.emplace(lambda, std::move(result)).first;
    return it->second ? &*it->second : nullptr;
  }

  /// Dominant part of ch L(lambda), or nullptr.
  const FormalCharacter* simple_dominant(const Weight& lambda) {
    auto it = dominant_.find(lambda);
    if (it != dominant_.end()) return &it->second;
    const FormalCharacter* c = simple(lambda);
    if (!c) return nullptr;
    return &dominant_.emplace(lambda, c->dominant_part()).first->second;
  }

  /// Decomposition numbers [chi(lambda) : L(mu)] for every restricted lambda
  /// whose coordinates are all <= bound; undetermined rows are marked
  /// ambiguous.
  DecompTable jantzen_solver(Int bound) {
    DecompTable out(sys_, p_);
    for (auto& lambda : restricted_weights(sys_->rank(), p_)) {
      if (std::any_of(lambda.begin(), lambda.end(), [&](Int x) { return x > bound; })) continue;
      if (auto row = decomposition_row(lambda)) out.insert(std::move(*row));
      else out.mark_ambiguous(lambda);
    }
    return out;
  }

  /// [chi(lambda) : L(mu)] for all mu, obtained by expanding chi(lambda) in
  /// the simple characters. Requires every ch L(mu) with mu <= lambda that
  /// occurs.
  std::optional<DecompRow> decomposition_row(const Weight& lambda) {
    if (!simple(lambda)) return std::nullopt;
    FormalCharacter rest = weyl(lambda).dominant_part();
    DecompRow row{lambda, {}, Provenance::Computed};
    while (!rest.empty()) {
      auto [top, coeff] = rest.leading();
      if (coeff < 0) throw NegativeRemainder("expanding chi" + lambda.str() + " hit " + top.str());
      const FormalCharacter* l = simple_dominant(top);
      if (!l) return std::nullopt;
      row.factors.emplace_back(top, coeff);
      rest.axpy(-coeff, *l);
    }
    return row;
  }

  /// Reason recorded for an undetermined weight.
  std::string reason(const Weight& lambda) const {
    auto it = why_.find(lambda);
    return it == why_.end() ? std::string() : it->second;
  }

 private:
  std::optional<FormalCharacter> restricted(const Weight& lambda) {
    if (in_bottom_alcove(*sys_, lambda, p_)) return weyl(lambda);
    if (const DecompRow* row = table_.find(lambda)) {
      FormalCharacter c = weyl(lambda);
      for (auto& [mu, m] : row->factors) {
        if (mu == lambda || m == 0) continue;
        const FormalCharacter* l = simple(mu);
        if (!l) {
          why_[lambda] = "table row needs undetermined " + mu.str();
          return std::nullopt;
        }
        c.axpy(-m, *l);
      }
      if (!c.nonnegative() || c[lambda] != 1)
        throw InvariantViolation("table row " + lambda.str() + " gives an invalid character");
      return c;
    }
    if (table_.ambiguous().count(lambda)) {
      why_[lambda] = "marked ambiguous in table";
      return std::nullopt;
    }
    if (!use_solver_) {
      why_[lambda] = "no table entry";
      return std::nullopt;
    }
    return solve(lambda);
  }

  std::optional<FormalCharacter> solve(const Weight& lambda) {
    const RootSystem& rs = *sys_;
    // the sum formula in the Weyl basis, then in the simple basis
    FormalCharacter rest(sys_);
    for (auto& [w, c] : jantzen_sum(rs, lambda, p_))
      for (auto& [u, m] : weyl_dominant_multiplicities(rs, w)) rest.add_term(u, c * m);
    std::vector<std::pair<Weight, Int>> layers;  // (mu, j_mu), canonical order
    while (!rest.empty()) {
      auto [top, coeff] = rest.leading();
      if (coeff < 0)
        throw NegativeRemainder("sum formula for " + lambda.str() + " negative at " + top.str());
      const FormalCharacter* l = simple_dominant(top);
      if (!l) {
        why_[lambda] = "sum formula needs undetermined " + top.str();
        return std::nullopt;
      }
      layers.emplace_back(top, coeff);
      rest.axpy(-coeff, *l);
    }

    const FormalCharacter& chi = weyl(lambda);
    FormalCharacter base = chi;
    std::vector<std::pair<Weight, Int>> open;  // j_mu >= 2
    for (auto& [mu, j] : layers) {
      if (j == 1) base.axpy(-1, *simple(mu));
      else open.emplace_back(mu, j);
    }
    if (open.empty()) {
      if (!base.nonnegative())
        throw InvariantViolation("sum formula gives a negative character for " + lambda.str());
      return base;
    }

    // enumerate 1 <= m_mu <= j_mu
    std::size_t count = 1;
    for (auto& [mu, j] : open) {
      count *= static_cast<std::size_t>(j);
      if (count > kCandidateLimit) {
        why_[lambda] = "too many candidate decompositions";
        return std::nullopt;
      }
    }
    std::optional<FormalCharacter> found;
    std::size_t survivors = 0;
    std::vector<Int> m(open.size(), 1);
    for (;;) {
      FormalCharacter cand = base;
      for (std::size_t k = 0; k < open.size(); ++k) cand.axpy(-m[k], *simple(open[k].first));
      if (cand.nonnegative()) {
        ++survivors;
        if (!found) found = std::move(cand);
      }
      std::size_t k = 0;
      while (k < open.size() && m[k] == open[k].second) m[k++] = 1;
      if (k == open.size()) break;
      ++m[k];
    }
    if (survivors == 1) return found;
    why_[lambda] = survivors == 0 ? "no admissible decomposition (inconsistent data)"
                                  : std::to_string(survivors) + " admissible decompositions";
    if (survivors == 0)
      throw InvariantViolation("no admissible decomposition for " + lambda.str());
    return std::nullopt;
  }

  SystemPtr sys_;
  Int p_;
  DecompTable table_;
  bool use_solver_;
  std::unordered_map<Weight, FormalCharacter, WeightHash> weyl_;
  std::unordered_map<Weight, std::optional<FormalCharacter>, WeightHash> simple_;
  std::unordered_map<Weight, FormalCharacter, WeightHash> dominant_;
  std::unordered_map<Weight, std::string, WeightHash> why_;
};

/// Dimension cross-check of a table: dim L(lambda) is recovered from the rows
/// by unitriangular inversion of Weyl dimensions and must be positive, agree
/// with the dimension of the character held by `simples`, and equal p^N at
/// (p-1) rho. Returns one message per problem.
inline std::vector<std::string> dimension_cross_check(const DecompTable& t, SimpleCharacters& simples) {
  const RootSystem& rs = *t.system();
  const Int p = t.p();
  std::vector<std::string> problems;
  std::map<Weight, std::optional<Int>> dims;
  std::function<std::optional<Int>(const Weight&)> dim_l = [&](const Weight& mu) -> std::optional<Int> {
    if (auto it = dims.find(mu); it != dims.end()) return it->second;
    std::optional<Int> d;
    if (!is_restricted(mu, p)) {
      d = 1;
      for (auto& digit : padic_digits(mu, p)) {
        auto dd = dim_l(digit);
        if (!dd) {
          d.reset();
          break;
        }
        *d *= *dd;
      }
    } else if (const DecompRow* row = t.find(mu)) {
      d = weyl_dimension(rs, mu);
      for (auto& [nu, m] : row->factors) {
        if (nu == mu) continue;
        auto dn = dim_l(nu);
        if (!dn) {
          d.reset();
          break;
        }
        *d -= m * *dn;
      }
    }
    return dims[mu] = d;
  };
  for (auto& [lambda, row] : t.rows()) {
    auto d = dim_l(lambda);
    if (!d) {
      problems.push_back(lambda.str() + ": a factor has no row");
      continue;
    }
    if (*d <= 0) problems.push_back(lambda.str() + ": dim L = " + std::to_string(*d));
    const FormalCharacter* c = simples.simple(lambda);
    if (c && c->dimension() != *d)
      problems.push_back(lambda.str() + ": dim L = " + std::to_string(*d) + " from the table, " +
                         std::to_string(c->dimension()) + " from the character");
  }
  const Weight st = (p - 1) * rs.rho();
  if (t.find(st)) {
    Int want = 1;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) want *= p;
    if (dim_l(st) != want)
      problems.push_back("dim L" + st.str() + " is not p^N = " + std::to_string(want));
  }
  return problems;
}

}  // namespace pfilt
