#include "coverlab/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace coverlab {

RReal::RReal(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RReal::RReal(const RReal& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RReal::RReal(RReal&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RReal& RReal::operator=(const RReal& o) {
  if (this != &o) {
    if (prec_ != o.prec_) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RReal& RReal::operator=(RReal&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

RReal::~RReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RReal RReal::from_int(long v, mpfr_prec_t prec) {
  RReal r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RReal RReal::from_int(const Int& v, mpfr_prec_t prec) {
  RReal r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RReal RReal::from_rat(const Rat& v, mpfr_prec_t prec) {
  RReal r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RReal RReal::from_decimal(const std::string& s, mpfr_prec_t prec) {
  return from_rat(rat_from_string(s), prec);
}

RReal RReal::from_endpoints(const Rat& lo, const Rat& hi, mpfr_prec_t prec) {
  if (lo > hi) throw std::invalid_argument("RReal: lo > hi");
  RReal r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

RReal RReal::euler_gamma(mpfr_prec_t prec) {
  RReal r(prec);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

RReal RReal::operator+(const RReal& o) const {
  RReal r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

RReal RReal::operator-(const RReal& o) const {
  RReal r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

RReal RReal::operator-() const {
  RReal r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RReal RReal::operator*(const RReal& o) const {
  RReal r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lower: min of the four products rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // upper: max of the four rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RReal RReal::inv() const {
  if (contains_zero()) throw std::domain_error("RReal::inv: interval contains 0");
  RReal r(prec_);
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

RReal RReal::operator/(const RReal& o) const { return *this * o.inv(); }

RReal RReal::exp() const {
  RReal r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RReal RReal::log() const {
  if (sign_lower() <= 0) throw std::domain_error("RReal::log: interval not positive");
  RReal r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RReal RReal::pow_ui(unsigned long e) const {
  RReal acc = from_int(1L, prec_);
  RReal base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

RReal RReal::pow(const RReal& y) const { return (y * log()).exp(); }

bool RReal::contains_zero() const { return sign_lower() <= 0 && sign_upper() >= 0; }

int RReal::sign_lower() const { return mpfr_sgn(lo_); }
int RReal::sign_upper() const { return mpfr_sgn(hi_); }

bool RReal::strictly_less(const RReal& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

bool RReal::strictly_less(const Rat& v) const { return mpfr_cmp_q(hi_, v.get_mpq_t()) < 0; }

bool RReal::strictly_greater(const Rat& v) const { return mpfr_cmp_q(lo_, v.get_mpq_t()) > 0; }

bool RReal::contains(const Rat& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

double RReal::width_approx() const {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

double RReal::lower_approx() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RReal::upper_approx() const { return mpfr_get_d(hi_, MPFR_RNDU); }

static std::string endpoint_string(const mpfr_t& v, mpfr_rnd_t rnd, size_t digits) {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%zuR*e", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, rnd, v);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

std::string RReal::lower_string(size_t digits) const {
  return endpoint_string(lo_, MPFR_RNDD, digits);
}

std::string RReal::upper_string(size_t digits) const {
  return endpoint_string(hi_, MPFR_RNDU, digits);
}

std::string RReal::to_string(size_t digits) const {
  return "[" + lower_string(digits) + ", " + upper_string(digits) + "]";
}

RReal RReal::from_endpoint_strings(const std::string& lo, const std::string& hi,
                                   mpfr_prec_t prec) {
  RReal r(prec);
  if (mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD) != 0)
    throw std::invalid_argument("RReal: bad endpoint string " + lo);
  if (mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU) != 0)
    throw std::invalid_argument("RReal: bad endpoint string " + hi);
  if (mpfr_cmp(r.lo_, r.hi_) > 0) throw std::invalid_argument("RReal: lo > hi after parse");
  return r;
}

RReal RReal::hull(const RReal& a, const RReal& b) {
  RReal r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RReal operator*(long a, const RReal& b) { return RReal::from_int(a, b.prec()) * b; }
RReal operator+(long a, const RReal& b) { return RReal::from_int(a, b.prec()) + b; }
RReal operator-(long a, const RReal& b) { return RReal::from_int(a, b.prec()) - b; }

}  // namespace coverlab
