#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coverlab/interval.hpp"
#include "coverlab/primes.hpp"
#include "coverlab/rational.hpp"
#include "coverlab/report.hpp"

namespace coverlab {

// p_{10^9}, used as the anchor prime p' throughout sections 4-7
inline const uint64_t kPrime1e9 = 22801763489ull;

// the delta value used from level N on, with the constants it induces
struct DistortionConstants {
  Rat delta_prime;  // 95007347/1520117553
  Rat eta;          // 15/(1-delta')
  Rat eta_prime;    // eta p'/(p'-1), just below 16
};
DistortionConstants delta_prime_constants();

// prod_{1 <= j < n} (1 + (15p^3+5p^2+5p-1)/(p-1)^4) over table primes
RReal m0_product(size_t n, const PrimeTable& table, mpfr_prec_t prec = 256);

// telescoping tail identities and the sigma_1..sigma_4 bounds of section 4
LemmaReport sigma_bounds(size_t start_index, const PrimeTable& table, mpfr_prec_t prec = 256);

// strict-prefix sums over the first n-1 primes
RReal reciprocal_prime_prefix(size_t n, const PrimeTable& table, mpfr_prec_t prec = 128);
RReal logp_over_p_prefix(size_t n, const PrimeTable& table, mpfr_prec_t prec = 128);

// M_1(p_i) = (1/(p_i-1)) prod_{j<i} (1 + 1/(p_j-1))
Rat m1_exact(size_t i, const PrimeTable& table);
RReal m1(size_t i, const PrimeTable& table, mpfr_prec_t prec = 128);
// prod_{i=3}^{i_max} (1 - M_1(p_i)), each factor checked to lie in (0,1)
RReal m1_product(size_t i_max, const PrimeTable& table, mpfr_prec_t prec = 128);

// lower bound 3.84636486599/p_N^1.7826381 * exp(-0.8913191/log p_N) with the
// proof-chain sub-checks; N = 10^9 uses the known p' exactly, larger N the
// tau enclosure
struct M1LowerBound {
  RReal value;
  LemmaReport report;
};
M1LowerBound m1_lower_bound(const Int& N, const PrimeTable& table, mpfr_prec_t prec = 256);

// F of degree 16 with F(log x)/x^3 = integral_x^inf log^16 t / t^4 dt,
// built from I_k = log^k x/(3x^3) + (k/3) I_{k-1}; G(x) = x^16 F(1/x)
struct TailPolynomial {
  std::vector<Rat> coeffs;  // F, ascending
  Rat eval(const Rat& x) const;
  RReal eval(const RReal& x) const;
  Rat g_at(const Rat& x) const;  // G(x) = x^16 F(1/x)
  bool recurrence_holds() const;
};
TailPolynomial tail_polynomial();

// 0.42722258614 log^16 p_N / p_N^3 with p_N enclosed by tau bounds
RReal tail_integral_bound(const Int& N, mpfr_prec_t prec = 256);

// Lemma: sum_{i >= N} P_i(B_i) <= 0.657743 log^16 p_N / p_N^3 under the
// delta' schedule. Desk scale feeds the published M0 endpoint as a certified
// input; pass a computed enclosure to override.
struct TailEstimate {
  RReal value;
  LemmaReport report;
};
TailEstimate tail_estimate(const Int& N, mpfr_prec_t prec = 256,
                           const std::optional<RReal>& m0_enclosure = std::nullopt);

// Lemma: Delta prod (1 - M_1) - sum P_i(B_i) exceeds 4.7596769e-50 at
// Delta = 1/12 (N = 1.5320302e21) and 5.9329e-42 Delta^3 for Delta < 1/12
// with N = ceil(2.8e20/Delta)
LemmaReport difference_bound(const Rat& Delta, mpfr_prec_t prec = 256);
Int difference_lemma_n(const Rat& Delta);

// global minimum of x^0.2173619 / log^14.7826381(2.8e20 x) over x > 0,
// attained where the log of the function is stationary
RReal aux_min_bound(mpfr_prec_t prec = 256);

// Lemma: the smooth-tail sum past K is negligible; all work in log-space
LemmaReport smooth_tail_bound(const Rat& Delta, mpfr_prec_t prec = 256);

// (1/N!) prod_{p <= p_N} (log Xtilde / log p) with
// log Xtilde = log X + theta(p_N); dominates the exact count
RReal granville_smooth_count_bound(const RReal& X, size_t N, const PrimeTable& table,
                                   mpfr_prec_t prec = 128);
Int smooth_count_exact(const Int& limit, uint64_t P);

}  // namespace coverlab
