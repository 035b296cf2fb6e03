#pragma once

// Box scans: one certificate per dominant weight in [lo, hi]^rank, computed
// by a pool of workers pulling rows from a shared counter. Each worker owns
// its SimpleCharacters, seeded from one precomputed table, so results do not
// depend on the number of threads.

#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "pfilt/certify.hpp"

namespace pfilt {

struct ScanJob {
  SystemPtr system;
  Int p = 2;
  int n = 1;
  Int lo = 0;
  Int hi = 0;
  unsigned jobs = 1;

  void validate() const {
    if (!system) throw Error("scan without a root system");
    if (lo < 0 || hi < lo) throw Error("box bounds must satisfy 0 <= lo <= hi");
    if (n < 0) throw Error("n must be >= 0");
  }
};

struct ScanRow {
  Weight lambda;
  Certificate cert;
  /// "ok", "fail", or "-" when a simple character is missing.
  std::string dim_check;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::map<std::string, std::size_t> counts;  // by status string prefix
};

inline std::vector<Weight> box_weights(std::size_t rank, Int lo, Int hi) {
  std::vector<Weight> out;
  Weight w(std::vector<Int>(rank, lo));
  for (;;) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < rank && w[i] == hi) w[i++] = lo;
    if (i == rank) break;
    ++w[i];
  }
  return out;
}

/// Certificate at level n: the level-1 certificate refined to n, or the
/// good-filtration certificate for n = 0.
inline Certificate certify_at(const Weight& lambda, int n, SimpleCharacters& simples) {
  if (n == 0) return good_filtration_certificate(*simples.system(), lambda, simples.p());
  Certificate c = certify(lambda, simples);
  return n == 1 ? c : refine(c, n, simples);
}

/// Dimension shadow of the Euler identity.
inline std::string dimension_check(const Certificate& cert, SimpleCharacters& simples) {
  const RootSystem& rs = *simples.system();
  if (cert.status == CertStatus::Unknown) return "-";
  Int total = 0;
  for (auto& l : cert.lines) {
    const FormalCharacter* s = simples.simple(l.mu0);
    if (!s) return "-";
    total += l.mult * s->dimension() * weyl_dimension(rs, l.mu1);
  }
  return total == weyl_dimension(rs, cert.lambda) ? "ok" : "fail";
}

inline ScanResult run_scan(const ScanJob& job, const DecompTable* seed = nullptr) {
  job.validate();
  const std::vector<Weight> lambdas = box_weights(job.system->rank(), job.lo, job.hi);
  ScanResult res;
  res.rows.resize(lambdas.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto worker = [&] {
    try {
      SimpleCharacters sc(job.system, job.p);
      if (seed) sc.ingest(*seed);
      for (std::size_t i; (i = next.fetch_add(1)) < lambdas.size();) {
        ScanRow& row = res.rows[i];
        row.lambda = lambdas[i];
        row.cert = certify_at(lambdas[i], job.n, sc);
        row.dim_check = dimension_check(row.cert, sc);
      }
    } catch (...) {
      std::lock_guard lock(err_mu);
      if (!err) err = std::current_exception();
      next = lambdas.size();
    }
  };
  const unsigned jobs = std::max(1u, job.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  for (auto& r : res.rows) {
    std::string s = r.cert.status_string();
    ++res.counts[s.substr(0, s.find(':'))];
  }
  return res;
}

}  // namespace pfilt
