#pragma once

#include <string>
#include <vector>

#include "coverlab/interval.hpp"
#include "coverlab/rational.hpp"

namespace coverlab {

enum class Verdict { Pass, Fail, TooWide, Skipped };

const char* verdict_name(Verdict v);

// Reproduction record for one named computation: what was computed, what the
// claimed bound is, and whether the whole enclosure satisfies it.
struct LemmaReport {
  struct Check {
    std::string label;
    Verdict verdict;
    std::string value;  // enclosure or exact rational, as text
    std::string claim;
  };

  std::string name;
  std::string claim;
  std::string inputs;
  std::string notes;  // e.g. which inputs are certified published values
  std::vector<Check> checks;

  void add(std::string label, Verdict v, std::string value = "", std::string claim = "");
  void add_bool(std::string label, bool ok, std::string value = "", std::string claim = "");
  void add_enclosure_less(std::string label, const RReal& value, const Rat& bound,
                          std::string claim = "");
  void add_enclosure_greater(std::string label, const RReal& value, const Rat& bound,
                             std::string claim = "");

  // Fail dominates; otherwise TooWide if any check could not be decided.
  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }

  std::string to_json_string(int indent = 2) const;
};

}  // namespace coverlab
