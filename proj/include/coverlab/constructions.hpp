#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coverlab/congruence.hpp"
#include "coverlab/rational.hpp"
#include "coverlab/report.hpp"

namespace coverlab {

// minimal moduli of a set under divisibility, with the reduced set D = {m/p}
struct DivisionMinimalSet {
  std::vector<Int> source;
  std::vector<Int> minimal;
  std::vector<Int> reduced;
};

// pre: every modulus divisible by p and p-smooth
DivisionMinimalSet division_minimal(const std::vector<Int>& moduli, uint64_t p);

// sum over nonempty J of (-1)^{|J|+1}/lcm{d : d in J}; |D| capped at 20
Rat inclusion_exclusion_sum(const std::vector<Int>& reduced, size_t budget = 20);

// density of the union of a_j (mod m_j) is at least the density of the union
// of 0 (mod m_j) -- exact check by scan
LemmaReport rogers_check(const std::vector<Congruence>& classes,
                         uint64_t budget = kDefaultScanBudget);

// finite smooth-multiples inclusion-exclusion bound:
// sum_{m in relevant} 1/m <= sum_J (-1)^{|J|+1} S(lcm_J(minimal)), where S(q)
// sums 1/n over p-smooth multiples n of q dividing corpus_lcm. The exact,
// divisor-restricted analogue of the infinite M1 unfolding.
Rat multexp_upper_bound(const std::vector<Int>& relevant_moduli, uint64_t p,
                        const Int& corpus_lcm);

// t in {1..p} with n + t m_jp m == a_j (mod p^e); the witness lies in both
// a_j (mod m_j) and a (mod m)
long shift_cover_witness(const Int& n, const Int& a_j, const Int& m_jp, uint64_t p, unsigned e,
                         const Int& a, const Int& m);

// distinct covering with minimum modulus exactly m0 in {2,3,4} and
// reciprocal sum < 1 + epsilon; oracle-verified before returning
CoveringSystem build_small_min_modulus_covering(unsigned m0, const Rat& epsilon,
                                                uint64_t scan_budget = kDefaultScanBudget);

// section-8 greedy prefix: J congruences with moduli 2^{t+1}..2^{t+J}; after
// J steps the first J integers of the ordering are covered
CoveringSystem greedy_power2_covering(unsigned t, size_t steps,
                                      const std::function<Int(size_t)>& ordering);
Int default_integer_ordering(size_t i);  // 0, 1, -1, 2, -2, ...

}  // namespace coverlab
