#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coverlab/rational.hpp"

namespace coverlab {

// residue class a (mod m), normalized to 0 <= a < m on construction
struct Congruence {
  Int residue;
  Int modulus;

  Congruence(Int a, Int m);
  bool contains(const Int& n) const;
  bool operator==(const Congruence& o) const {
    return residue == o.residue && modulus == o.modulus;
  }
};

class CoveringSystem {
 public:
  CoveringSystem() = default;
  explicit CoveringSystem(std::vector<Congruence> classes) : classes_(std::move(classes)) {}

  const std::vector<Congruence>& classes() const { return classes_; }
  bool empty() const { return classes_.empty(); }
  size_t size() const { return classes_.size(); }
  void add(Congruence c) { classes_.push_back(std::move(c)); }

  static CoveringSystem from_json_string(const std::string& text);
  static CoveringSystem load(const std::string& path);
  std::string to_json_string(int indent = 2) const;
  void save(const std::string& path) const;

 private:
  std::vector<Congruence> classes_;
};

inline constexpr uint64_t kDefaultScanBudget = 100000000;  // exact scans stay desk-scale

Int lcm_moduli(const CoveringSystem& sys);

// result of one exact mark-sweep over [0, L)
struct ScanResult {
  Int lcm;
  uint64_t covered;       // residues hit at least once
  uint64_t multiply_covered;  // residues hit two or more times
  bool covering() const { return Rat(covered) == Rat(lcm); }
  bool exact() const { return covering() && multiply_covered == 0; }
};
ScanResult scan(const CoveringSystem& sys, uint64_t budget = kDefaultScanBudget);

bool is_covering(const CoveringSystem& sys, uint64_t budget = kDefaultScanBudget);
bool is_distinct(const CoveringSystem& sys);
bool is_exact(const CoveringSystem& sys, uint64_t budget = kDefaultScanBudget);
Int min_modulus(const CoveringSystem& sys);

// sum of 1/m over all classes, counted with multiplicity
Rat reciprocal_sum(const CoveringSystem& sys);

// exact density of the union of the given classes, by scan mod lcm
Rat covered_density(const std::vector<Congruence>& classes,
                    uint64_t budget = kDefaultScanBudget);

// density of integers not covered by the classes with 3-smooth modulus
Rat delta(const CoveringSystem& sys, uint64_t budget = kDefaultScanBudget);

// sum of 1/m over P-smooth m >= m0: prod_{p<=P} p/(p-1) minus the finite sum
// over P-smooth m < m0
Rat smooth_reciprocal_mass(uint64_t P, const Int& m0);

// ascending P-smooth numbers <= limit (1 included)
std::vector<Int> smooth_numbers_upto(const Int& limit, uint64_t P);

}  // namespace coverlab
