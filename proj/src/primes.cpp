#include "coverlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coverlab {

namespace {

constexpr uint64_t kSegmentSize = 1u << 20;

std::vector<uint64_t> base_primes(uint64_t n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<uint64_t> out;
  for (uint64_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return out;
}

}  // namespace

PrimeTable PrimeTable::sieve(uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
  std::vector<uint64_t> primes;
  primes.reserve(static_cast<size_t>(1.2 * limit / std::log(static_cast<double>(limit)) + 16));
  prime_stream(2, limit, 1, [&](uint64_t, uint64_t p) { primes.push_back(p); });
  return PrimeTable(limit, std::move(primes));
}

void prime_stream(uint64_t from, uint64_t limit, uint64_t start_index,
                  const std::function<void(uint64_t, uint64_t)>& fn) {
  if (limit < 2 || from > limit) return;
  from = std::max<uint64_t>(from, 2);
  const uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const auto base = base_primes(root);
  std::vector<uint8_t> seg;
  uint64_t index = start_index;
  for (uint64_t lo = from; lo <= limit; lo += kSegmentSize) {
    const uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
    seg.assign(static_cast<size_t>(hi - lo + 1), 1);
    for (uint64_t p : base) {
      if (p * p > hi) break;
      uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (uint64_t j = start; j <= hi; j += p) seg[static_cast<size_t>(j - lo)] = 0;
    }
    for (uint64_t v = lo; v <= hi; ++v) {
      if (seg[static_cast<size_t>(v - lo)]) fn(index++, v);
    }
  }
}

uint64_t PrimeTable::prime(size_t i) const {
  if (i == 0 || i > primes_.size()) throw std::out_of_range("prime index out of range");
  return primes_[i - 1];
}

RReal PrimeTable::reciprocal_prefix(size_t n, mpfr_prec_t prec) const {
  if (n > primes_.size()) throw std::out_of_range("reciprocal_prefix: n beyond table");
  RReal one = RReal::from_int(1L, prec);
  RReal sum(prec);
  for (size_t j = 0; j < n; ++j)
    sum = sum + one / RReal::from_int(static_cast<long>(primes_[j]), prec);
  return sum;
}

RReal PrimeTable::log_over_p_prefix(size_t n, mpfr_prec_t prec) const {
  if (n > primes_.size()) throw std::out_of_range("log_over_p_prefix: n beyond table");
  RReal sum(prec);
  for (size_t j = 0; j < n; ++j) {
    RReal p = RReal::from_int(static_cast<long>(primes_[j]), prec);
    sum = sum + p.log() / p;
  }
  return sum;
}

RReal PrimeTable::theta_prefix(size_t n, mpfr_prec_t prec) const {
  if (n > primes_.size()) throw std::out_of_range("theta_prefix: n beyond table");
  RReal sum(prec);
  for (size_t j = 0; j < n; ++j)
    sum = sum + RReal::from_int(static_cast<long>(primes_[j]), prec).log();
  return sum;
}

RReal PrimeTable::loglog_prefix(size_t n, mpfr_prec_t prec) const {
  if (n > primes_.size()) throw std::out_of_range("loglog_prefix: n beyond table");
  RReal sum(prec);
  for (size_t j = 0; j < n; ++j)
    sum = sum + RReal::from_int(static_cast<long>(primes_[j]), prec).log().log();
  return sum;
}

Rat PrimeTable::reciprocal_prefix_exact(size_t n) const {
  if (n > primes_.size()) throw std::out_of_range("reciprocal_prefix_exact: n beyond table");
  Rat sum(0);
  for (size_t j = 0; j < n; ++j) sum += Rat(1, static_cast<unsigned long>(primes_[j]));
  sum.canonicalize();
  return sum;
}

RReal NthPrimeBounds::hull() const { return RReal::hull(tau1, tau2); }

NthPrimeBounds nth_prime_bounds(const Int& n, mpfr_prec_t prec) {
  if (n < 20) throw std::invalid_argument("nth_prime_bounds: inequality requires n >= 20");
  RReal N = RReal::from_int(n, prec);
  RReal lg = N.log();
  RReal llg = lg.log();
  RReal half = RReal::from_rat(Rat(1, 2), prec);
  RReal t1 = N * (lg + llg - half - half - half);
  RReal t2 = N * (lg + llg - half);
  return {t1, t2};
}

LemmaReport validate_prime_inequalities(const PrimeTable& table,
                                        const std::vector<size_t>& sample,
                                        mpfr_prec_t prec) {
  LemmaReport rep;
  rep.name = "prime-inequality-validators";
  rep.claim = "Rosser-Schoenfeld (3.18)/(3.22), Dusart pi(t), Schoenfeld theta(x) hold at sampled indices";
  rep.inputs = "sample size " + std::to_string(sample.size()) +
               ", sieve limit " + std::to_string(table.limit());

  // validity thresholds of the cited statements; below them the check is skipped
  const Rat rs318_min(286);
  const Rat rs322_min(319);
  const Rat dusart_min_sq(100000);  // t > 10^2.5  <=>  t^2 > 10^5
  const Rat B = rat_from_string("0.26149721284765");
  const Rat E = rat_from_string("-1.3325822757");

  for (size_t i : sample) {
    if (i == 0 || i > table.count())
      throw std::out_of_range("validate_prime_inequalities: index beyond table");
    const std::string tag = "i=" + std::to_string(i);
    // (3.18): sum_{j<i} 1/p_j < loglog p_{i-1} + B + 1/(2 log^2 p_{i-1})
    if (i >= 2) {
      uint64_t pim1 = table.prime(i - 1);
      if (Rat(static_cast<unsigned long>(pim1)) >= rs318_min) {
        RReal lhs = table.reciprocal_prefix(i - 1, prec);
        RReal lp = RReal::from_int(static_cast<long>(pim1), prec).log();
        RReal rhs = lp.log() + RReal::from_rat(B, prec) +
                    (2L * lp.pow_ui(2)).inv();
        rep.add(tag + " RS(3.18)", lhs.strictly_less(rhs) ? Verdict::Pass : Verdict::Fail,
                lhs.to_string(15), "< " + rhs.to_string(15));
      } else {
        rep.add(tag + " RS(3.18)", Verdict::Skipped, "", "p_{i-1} below validity range 286");
      }
      // (3.22): sum_{j<i} log p_j / p_j < log p_{i-1} + E + 1/(2 log p_{i-1})
      if (Rat(static_cast<unsigned long>(pim1)) >= rs322_min) {
        RReal lhs = table.log_over_p_prefix(i - 1, prec);
        RReal lp = RReal::from_int(static_cast<long>(pim1), prec).log();
        RReal rhs = lp + RReal::from_rat(E, prec) + (2L * lp).inv();
        rep.add(tag + " RS(3.22)", lhs.strictly_less(rhs) ? Verdict::Pass : Verdict::Fail,
                lhs.to_string(15), "< " + rhs.to_string(15));
      } else {
        rep.add(tag + " RS(3.22)", Verdict::Skipped, "", "p_{i-1} below validity range 319");
      }
    }
    // Dusart: pi(t) <= (t/log t)(1 + 1/log t + 2.53816/log^2 t) for t > 10^2.5
    uint64_t pi = table.prime(i);
    Rat pisq = Rat(static_cast<unsigned long>(pi)) * Rat(static_cast<unsigned long>(pi));
    if (pisq > dusart_min_sq) {
      RReal t = RReal::from_int(static_cast<long>(pi), prec);
      RReal lt = t.log();
      RReal rhs = (t / lt) * (RReal::from_int(1L, prec) + lt.inv() +
                              RReal::from_decimal("2.53816", prec) / lt.pow_ui(2));
      Rat pival(static_cast<unsigned long>(i));
      rep.add(tag + " Dusart", rhs.strictly_greater(pival) ? Verdict::Pass : Verdict::Fail,
              rat_to_string(pival), "<= " + rhs.to_string(15));
    } else {
      rep.add(tag + " Dusart", Verdict::Skipped, "", "p_i below validity range 10^2.5");
    }
    // Schoenfeld: theta(p_i) <= p_i (1 + 0.0077629/log p_i)
    {
      RReal theta = table.theta_prefix(i, prec);
      RReal t = RReal::from_int(static_cast<long>(pi), prec);
      RReal rhs = t * (RReal::from_int(1L, prec) + RReal::from_decimal("0.0077629", prec) / t.log());
      rep.add(tag + " theta", theta.strictly_less(rhs) ? Verdict::Pass : Verdict::Fail,
              theta.to_string(15), "<= " + rhs.to_string(15));
    }
  }
  if (sample.empty()) rep.add("empty sample", Verdict::Pass, "", "vacuous");
  return rep;
}

LemmaReport loglog_lemma_check(const PrimeTable& table, size_t n_max, mpfr_prec_t prec) {
  LemmaReport rep;
  rep.name = "loglog-lemma";
  rep.claim = "sum_{p <= p_n} log log p >= n log log n for 44 <= n <= n_max";
  rep.inputs = "n_max = " + std::to_string(n_max);
  if (n_max < 44) throw std::invalid_argument("loglog_lemma_check: n_max must be >= 44");
  if (n_max > table.count())
    throw std::invalid_argument("loglog_lemma_check: sieve does not cover p_{n_max}");

  RReal sum(prec);
  size_t largest_small_fail = 0;
  size_t fail_count = 0;
  size_t first_fail = 0;
  for (size_t n = 1; n <= n_max; ++n) {
    sum = sum + RReal::from_int(static_cast<long>(table.prime(n)), prec).log().log();
    if (n < 3) continue;
    RReal rhs = RReal::from_int(static_cast<long>(n), prec) *
                RReal::from_int(static_cast<long>(n), prec).log().log();
    // certified only when the whole enclosure satisfies sum >= n log log n
    bool holds = mpfr_cmp(sum.lo_raw(), rhs.hi_raw()) >= 0;
    if (n < 44) {
      if (!holds) largest_small_fail = n;
    } else if (!holds) {
      ++fail_count;
      if (first_fail == 0) first_fail = n;
    }
  }
  rep.add("sweep 44..n_max", fail_count == 0 ? Verdict::Pass : Verdict::Fail,
          fail_count == 0 ? "all hold"
                          : "first failure at n = " + std::to_string(first_fail),
          "certified with outward rounding");
  rep.add("largest failing n < 44", Verdict::Pass, std::to_string(largest_small_fail),
          "boundary below the lemma range");
  return rep;
}

}  // namespace coverlab
