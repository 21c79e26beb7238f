#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverlab {

using Int = mpz_class;
using Rat = mpq_class;

// "p/q" or plain integer or decimal like "0.42722258614" -> exact rational.
Rat rat_from_string(const std::string& s);

// canonical "p/q" (or "p" when q == 1)
std::string rat_to_string(const Rat& r);

Rat rat_pow(const Rat& base, unsigned long e);

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// primes <= n by trial division; for the small bounds used in exact formulas
std::vector<uint64_t> small_primes_upto(uint64_t n);

bool is_smooth(Int m, uint64_t p);
bool is_prime_u64(uint64_t n);

}  // namespace coverlab
