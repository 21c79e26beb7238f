#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "coverlab/rational.hpp"

namespace coverlab {

// Directed-rounded interval: every operation returns an interval that
// encloses the exact result (lower endpoint rounded down, upper rounded up).
// All analytic bounds in this project are carried by this type; a comparison
// counts as verified only when it holds for the whole enclosure.
class RReal {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 256;

  explicit RReal(mpfr_prec_t prec = kDefaultPrec);
  RReal(const RReal& o);
  RReal(RReal&& o) noexcept;
  RReal& operator=(const RReal& o);
  RReal& operator=(RReal&& o) noexcept;
  ~RReal();

  static RReal from_int(long v, mpfr_prec_t prec = kDefaultPrec);
  static RReal from_int(const Int& v, mpfr_prec_t prec = kDefaultPrec);
  static RReal from_rat(const Rat& v, mpfr_prec_t prec = kDefaultPrec);
  // decimal string, converted exactly then rounded outward
  static RReal from_decimal(const std::string& s, mpfr_prec_t prec = kDefaultPrec);
  static RReal from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec = kDefaultPrec);
  // Euler-Mascheroni constant
  static RReal euler_gamma(mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t prec() const { return prec_; }

  RReal operator+(const RReal& o) const;
  RReal operator-(const RReal& o) const;
  RReal operator*(const RReal& o) const;
  RReal operator/(const RReal& o) const;  // requires 0 outside divisor
  RReal operator-() const;

  RReal add_int(long v) const { return *this + from_int(v, prec_); }
  RReal sub_int(long v) const { return *this - from_int(v, prec_); }

  RReal exp() const;
  RReal log() const;           // requires lower > 0
  RReal pow_ui(unsigned long e) const;
  RReal pow(const RReal& y) const;  // exp(y log x), requires lower > 0
  RReal inv() const;

  bool contains_zero() const;
  bool is_positive() const { return sign_lower() > 0; }
  int sign_lower() const;
  int sign_upper() const;

  // entire enclosure strictly below / above the given value
  bool strictly_less(const RReal& o) const;
  bool strictly_less(const Rat& v) const;
  bool strictly_greater(const Rat& v) const;
  bool contains(const Rat& v) const;

  // true value could still be on either side: enclosure straddles v
  bool straddles(const Rat& v) const { return !strictly_less(v) && !strictly_greater(v); }

  double width_approx() const;
  double lower_approx() const;
  double upper_approx() const;

  // decimal endpoints, lower rounded down / upper rounded up
  std::string lower_string(size_t digits = 25) const;
  std::string upper_string(size_t digits = 25) const;
  std::string to_string(size_t digits = 25) const;

  // enclosure-safe textual round trip: parse lower down, upper up
  static RReal from_endpoint_strings(const std::string& lo, const std::string& hi,
                                     mpfr_prec_t prec = kDefaultPrec);

  // [a.lo, b.hi] -- the smallest interval containing both
  static RReal hull(const RReal& a, const RReal& b);

  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t prec_;
};

RReal operator*(long a, const RReal& b);
RReal operator+(long a, const RReal& b);
RReal operator-(long a, const RReal& b);

}  // namespace coverlab
