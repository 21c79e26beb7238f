#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverlab/congruence.hpp"
#include "coverlab/rational.hpp"
#include "coverlab/report.hpp"

namespace coverlab {

inline constexpr uint64_t kDefaultWeightBudget = 10000000;  // entries stored over Q_r

// L = p_1^g_1 ... p_r^g_r with the level moduli l_i = p_1^g_1 ... p_i^g_i.
// Primes must be strictly increasing; exponents may be zero.
class PrimePowerProfile {
 public:
  PrimePowerProfile(std::vector<std::pair<uint64_t, unsigned>> factors,
                    uint64_t budget = kDefaultWeightBudget);
  static PrimePowerProfile parse(const std::string& text,
                                 uint64_t budget = kDefaultWeightBudget);  // "2^2,3,5^1"

  size_t levels() const { return factors_.size(); }
  uint64_t prime(size_t i) const { return factors_[i - 1].first; }      // 1-based
  unsigned exponent(size_t i) const { return factors_[i - 1].second; }  // 1-based
  uint64_t fiber_size(size_t i) const;                                  // p_i^g_i
  uint64_t level_modulus(size_t i) const { return level_mod_[i]; }      // l_i, l_0 = 1
  uint64_t full_modulus() const { return level_mod_.back(); }           // l_r
  std::string to_string() const;

 private:
  std::vector<std::pair<uint64_t, unsigned>> factors_;
  std::vector<uint64_t> level_mod_;
};

// delta_i in [0, 1/2] per level; missing entries read as 0
class DeltaSchedule {
 public:
  DeltaSchedule() = default;
  explicit DeltaSchedule(std::vector<Rat> deltas);
  static DeltaSchedule parse(const std::string& text);  // "0,0,1/4"
  const Rat& at(size_t i) const;                        // 1-based
  size_t size() const { return deltas_.size(); }

 private:
  std::vector<Rat> deltas_;
};

// residues of Q_i lying in B_i, as a bitset over [0, l_i)
struct BadSet {
  size_t level;
  uint64_t modulus;
  std::vector<bool> members;

  uint64_t count() const;
  bool empty() const { return count() == 0; }
};

// Weight assignment extended uniformly to Q_r; exact rationals throughout so
// the mass identity P_i(Q_r) = 1 is testable as an equality.
class DistortionState {
 public:
  static DistortionState initial(const PrimePowerProfile& profile);

  size_t level() const { return level_; }
  const PrimePowerProfile& profile() const { return profile_; }
  const std::vector<Rat>& weights() const { return weights_; }
  Rat mass() const;
  // P_level restricted to Q_j: sums over fibers of Q_r -> Q_j
  std::vector<Rat> marginal(size_t j) const;

 private:
  DistortionState(PrimePowerProfile profile, size_t level, std::vector<Rat> weights)
      : profile_(std::move(profile)), level_(level), weights_(std::move(weights)) {}
  PrimePowerProfile profile_;
  size_t level_;
  std::vector<Rat> weights_;

  friend DistortionState step(const DistortionState&, const BadSet&, const Rat&);
};

// residues of Q_i covered by a congruence whose modulus is divisible by p_i
// and p_i-smooth
BadSet bad_set(const CoveringSystem& sys, const PrimePowerProfile& profile, size_t i);

// fraction of the fiber above x in B_i, for x in Q_{i-1}
Rat alpha(const DistortionState& state, uint64_t x, const BadSet& bad);

// one distortion update: state at level i-1 plus B_i and delta_i gives level i
DistortionState step(const DistortionState& state, const BadSet& bad, const Rat& delta_i);

// P_i(B_i) as the direct weight sum over B_i
Rat measure(const DistortionState& state, const BadSet& bad);

// P_i(B_i) recomputed through the alpha identity
// (1/(1-delta)) sum_x max{0, alpha(x)-delta} P_{i-1}(x)
Rat measure_closed_form(const DistortionState& prev, const BadSet& bad, const Rat& delta_i);

// max{0, t - delta} <= 27 t^4 / (256 delta^3), plus the factorization
// identity 27u^4 - 256u + 256 = (3u^2+8u+16)(3u-4)^2 at u = t/delta
bool quartic_bound_check(const Rat& t, const Rat& delta_i);

// E_{i-1}[alpha_i^4]
Rat fourth_moment(const DistortionState& prev, const BadSet& bad);

// number of ordered 4-tuples of positive integers with lcm equal to m
Int chi(const Int& m);

// 1 + (15p^3+5p^2+5p-1)/((1-delta)(p-1)^4)
Rat euler_factor(uint64_t p, const Rat& delta_i);
// series form 1 + (1/(1-delta)) sum_{t=1}^{T} (4t^3+6t^2+4t+1)/p^t, plus a
// geometric bound on the discarded tail; brackets the closed form
std::pair<Rat, Rat> euler_factor_series(uint64_t p, const Rat& delta_i, unsigned terms);

// nu(m) = prod over profile primes p_j | m of 1/(1-delta_j); primes outside
// the profile carry delta = 0
Rat nu(const Int& m, const PrimePowerProfile& profile, const DeltaSchedule& sched);

// Full inequality chain P_i(B_i) <= moment bound <= divisor-restricted lcm
// bound <= smooth-sum bound <= Euler product, per level with delta_i > 0.
// Requires distinct moduli (the lcm bound counts each reduced modulus once).
LemmaReport moment_bound_chain_check(const CoveringSystem& sys, const PrimePowerProfile& profile,
                                     const DeltaSchedule& sched);

}  // namespace coverlab
