#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coverlab/interval.hpp"
#include "coverlab/rational.hpp"
#include "coverlab/report.hpp"

namespace coverlab {

// Indexed primes p_1 = 2, p_2 = 3, ... with interval-valued prefix sums.
// Immutable after construction.
class PrimeTable {
 public:
  // all primes <= limit, segmented so memory stays O(sqrt(limit) + segment)
  static PrimeTable sieve(uint64_t limit);

  uint64_t limit() const { return limit_; }
  size_t count() const { return primes_.size(); }
  uint64_t prime(size_t i) const;  // 1-based
  const std::vector<uint64_t>& primes() const { return primes_; }

  // sums over primes[1..n] (inclusive)
  RReal reciprocal_prefix(size_t n, mpfr_prec_t prec = 128) const;
  RReal log_over_p_prefix(size_t n, mpfr_prec_t prec = 128) const;
  RReal theta_prefix(size_t n, mpfr_prec_t prec = 128) const;   // sum log p
  RReal loglog_prefix(size_t n, mpfr_prec_t prec = 128) const;  // sum log log p
  Rat reciprocal_prefix_exact(size_t n) const;

 private:
  PrimeTable(uint64_t limit, std::vector<uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}
  uint64_t limit_;
  std::vector<uint64_t> primes_;
};

// Streaming sieve over [from, limit], calling fn(index, p) with the 1-based
// global prime index; `start_index` is the index of the first prime >= from.
// Used by the full-scale runs which cannot afford to store 1e9 primes.
void prime_stream(uint64_t from, uint64_t limit, uint64_t start_index,
                  const std::function<void(uint64_t, uint64_t)>& fn);

// Rosser-Schoenfeld Theorem 3 window: tau1(n) < p_n < tau2(n) for n >= 20.
struct NthPrimeBounds {
  RReal tau1;
  RReal tau2;
  // the interval [tau1.lo, tau2.hi] guaranteed to contain p_n
  RReal hull() const;
};
NthPrimeBounds nth_prime_bounds(const Int& n, mpfr_prec_t prec = 256);

// Desk-scale empirical validation of the cited prime inequalities at sampled
// indices. Checks outside an inequality's stated validity range are recorded
// as skipped, not failed.
LemmaReport validate_prime_inequalities(const PrimeTable& table,
                                        const std::vector<size_t>& sample,
                                        mpfr_prec_t prec = 128);

// sum_{p <= p_n} log log p >= n log log n for 44 <= n <= n_max, with outward
// rounding; also reports the largest n < 44 where the inequality fails.
LemmaReport loglog_lemma_check(const PrimeTable& table, size_t n_max,
                               mpfr_prec_t prec = 128);

}  // namespace coverlab
