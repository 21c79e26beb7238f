#include "coverlab/distortion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coverlab {

PrimePowerProfile::PrimePowerProfile(std::vector<std::pair<uint64_t, unsigned>> factors,
                                     uint64_t budget)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("profile: needs at least one prime");
  uint64_t prev = 0;
  level_mod_.push_back(1);
  for (auto [p, g] : factors_) {
    if (!is_prime_u64(p)) throw std::invalid_argument("profile: " + std::to_string(p) + " is not prime");
    if (p <= prev) throw std::invalid_argument("profile: primes must be strictly increasing");
    prev = p;
    uint64_t m = level_mod_.back();
    for (unsigned k = 0; k < g; ++k) {
      if (m > budget / p) throw std::runtime_error("profile: l_r exceeds weight budget");
      m *= p;
    }
    level_mod_.push_back(m);
  }
}

PrimePowerProfile PrimePowerProfile::parse(const std::string& text, uint64_t budget) {
  std::vector<std::pair<uint64_t, unsigned>> factors;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto caret = item.find('^');
    uint64_t p = std::stoull(item.substr(0, caret));
    unsigned g = caret == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(item.substr(caret + 1)));
    factors.emplace_back(p, g);
  }
  return PrimePowerProfile(std::move(factors), budget);
}

uint64_t PrimePowerProfile::fiber_size(size_t i) const {
  return level_mod_[i] / level_mod_[i - 1];
}

std::string PrimePowerProfile::to_string() const {
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(factors_[i].first) + "^" + std::to_string(factors_[i].second);
  }
  return out;
}

DeltaSchedule::DeltaSchedule(std::vector<Rat> deltas) : deltas_(std::move(deltas)) {
  for (auto& d : deltas_) {
    d.canonicalize();
    if (d < 0 || d > Rat(1, 2))
      throw std::invalid_argument("delta schedule: values must lie in [0, 1/2]");
  }
}

DeltaSchedule DeltaSchedule::parse(const std::string& text) {
  std::vector<Rat> ds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ds.push_back(rat_from_string(item));
  }
  return DeltaSchedule(std::move(ds));
}

const Rat& DeltaSchedule::at(size_t i) const {
  static const Rat zero(0);
  if (i == 0) throw std::out_of_range("delta schedule is 1-based");
  return i <= deltas_.size() ? deltas_[i - 1] : zero;
}

uint64_t BadSet::count() const {
  return static_cast<uint64_t>(std::count(members.begin(), members.end(), true));
}

DistortionState DistortionState::initial(const PrimePowerProfile& profile) {
  uint64_t L = profile.full_modulus();
  std::vector<Rat> w(L, Rat(1, static_cast<unsigned long>(L)));
  return DistortionState(profile, 0, std::move(w));
}

Rat DistortionState::mass() const {
  Rat s(0);
  for (const auto& w : weights_) s += w;
  s.canonicalize();
  return s;
}

std::vector<Rat> DistortionState::marginal(size_t j) const {
  uint64_t lj = profile_.level_modulus(j);
  std::vector<Rat> out(lj, Rat(0));
  uint64_t L = profile_.full_modulus();
  for (uint64_t n = 0; n < L; ++n) out[n % lj] += weights_[n];
  for (auto& r : out) r.canonicalize();
  return out;
}

BadSet bad_set(const CoveringSystem& sys, const PrimePowerProfile& profile, size_t i) {
  if (i == 0 || i > profile.levels()) throw std::out_of_range("bad_set: level out of range");
  const uint64_t li = profile.level_modulus(i);
  const uint64_t pi = profile.prime(i);
  const Int L(static_cast<unsigned long>(profile.full_modulus()));
  BadSet b{i, li, std::vector<bool>(li, false)};
  for (const auto& c : sys.classes()) {
    if (!mpz_divisible_p(L.get_mpz_t(), c.modulus.get_mpz_t()))
      throw std::invalid_argument("bad_set: modulus " + c.modulus.get_str() +
                                  " does not divide l_r");
    if (!mpz_divisible_ui_p(c.modulus.get_mpz_t(), pi)) continue;
    if (!is_smooth(c.modulus, pi)) continue;
    // p_i-smooth divisor of L divides l_i
    uint64_t m = c.modulus.get_ui();
    for (uint64_t x = c.residue.get_ui(); x < li; x += m) b.members[x] = true;
  }
  return b;
}

Rat alpha(const DistortionState& state, uint64_t x, const BadSet& bad) {
  const auto& prof = state.profile();
  size_t i = bad.level;
  if (state.level() + 1 != i)
    throw std::invalid_argument("alpha: bad set must sit one level above the state");
  uint64_t lim1 = prof.level_modulus(i - 1);
  uint64_t fiber = prof.fiber_size(i);
  if (x >= lim1) throw std::out_of_range("alpha: x outside Q_{i-1}");
  uint64_t hits = 0;
  for (uint64_t t = 0; t < fiber; ++t) hits += bad.members[x + t * lim1];
  Rat a(static_cast<unsigned long>(hits), static_cast<unsigned long>(fiber));
  a.canonicalize();
  return a;
}

DistortionState step(const DistortionState& state, const BadSet& bad, const Rat& delta_in) {
  Rat delta_i = delta_in;
  delta_i.canonicalize();
  if (delta_i < 0 || delta_i > Rat(1, 2))
    throw std::invalid_argument("step: delta must lie in [0, 1/2]");
  const auto& prof = state.profile();
  const size_t i = bad.level;
  if (state.level() + 1 != i)
    throw std::invalid_argument("step: bad set must sit one level above the state");
  const uint64_t lim1 = prof.level_modulus(i - 1);
  const uint64_t li = prof.level_modulus(i);
  const uint64_t L = prof.full_modulus();
  const Rat one(1);

  // per-fiber factors; the off-branch is never evaluated when alpha = 1
  std::vector<Rat> on_factor(lim1), off_factor(lim1);
  for (uint64_t x = 0; x < lim1; ++x) {
    Rat a = alpha(state, x, bad);
    if (a > 0) {
      Rat num = a - delta_i;
      on_factor[x] = num > 0 ? Rat(num / (a * (one - delta_i))) : Rat(0);
      on_factor[x].canonicalize();
    }
    if (a < 1) {
      off_factor[x] = std::min(Rat(one / (one - a)), Rat(one / (one - delta_i)));
      off_factor[x].canonicalize();
    }
  }

  std::vector<Rat> w = state.weights();
  for (uint64_t n = 0; n < L; ++n) {
    uint64_t x = n % lim1;
    const Rat& f = bad.members[n % li] ? on_factor[x] : off_factor[x];
    w[n] *= f;
    w[n].canonicalize();
  }
  return DistortionState(prof, i, std::move(w));
}

Rat measure(const DistortionState& state, const BadSet& bad) {
  if (state.level() != bad.level)
    throw std::invalid_argument("measure: state and bad set levels differ");
  const uint64_t li = bad.modulus;
  const uint64_t L = state.profile().full_modulus();
  Rat s(0);
  for (uint64_t n = 0; n < L; ++n)
    if (bad.members[n % li]) s += state.weights()[n];
  s.canonicalize();
  return s;
}

Rat measure_closed_form(const DistortionState& prev, const BadSet& bad, const Rat& delta_i) {
  const auto marg = prev.marginal(bad.level - 1);
  Rat s(0);
  for (uint64_t x = 0; x < marg.size(); ++x) {
    Rat a = alpha(prev, x, bad);
    Rat num = a - delta_i;
    if (num > 0) s += num * marg[x];
  }
  s /= (Rat(1) - delta_i);
  s.canonicalize();
  return s;
}

bool quartic_bound_check(const Rat& t_in, const Rat& delta_in) {
  Rat t = t_in, delta_i = delta_in;
  t.canonicalize();
  delta_i.canonicalize();
  if (delta_i <= 0) throw std::invalid_argument("quartic_bound_check: delta must be positive");
  if (t < 0) throw std::invalid_argument("quartic_bound_check: t must be >= 0");
  Rat lhs = std::max(Rat(0), Rat(t - delta_i));
  Rat rhs = Rat(27) * rat_pow(t, 4) / (Rat(256) * rat_pow(delta_i, 3));
  bool ineq = lhs <= rhs;
  // 27u^4 - 256u + 256 = (3u^2 + 8u + 16)(3u - 4)^2 at u = t/delta
  Rat u = t / delta_i;
  Rat left = Rat(27) * rat_pow(u, 4) - Rat(256) * u + Rat(256);
  Rat right = (Rat(3) * u * u + Rat(8) * u + Rat(16)) * rat_pow(Rat(3) * u - Rat(4), 2);
  return ineq && left == right;
}

Rat fourth_moment(const DistortionState& prev, const BadSet& bad) {
  const auto marg = prev.marginal(bad.level - 1);
  Rat s(0);
  for (uint64_t x = 0; x < marg.size(); ++x) s += rat_pow(alpha(prev, x, bad), 4) * marg[x];
  s.canonicalize();
  return s;
}

Int chi(const Int& m) {
  if (m < 1) throw std::invalid_argument("chi: m must be >= 1");
  Int rest = m, out(1);
  for (Int p(2); rest > 1; p = (p == 2 ? Int(3) : Int(p + 2))) {
    if (p * p > rest) {  // remaining factor is prime, exponent 1
      out *= Int(16 - 1);
      break;
    }
    unsigned long t = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++t;
    }
    if (t > 0) out *= int_pow(Int(t + 1), 4) - int_pow(Int(t), 4);
  }
  return out;
}

Rat euler_factor(uint64_t p, const Rat& delta_in) {
  Rat delta_i = delta_in;
  delta_i.canonicalize();
  if (delta_i < 0 || delta_i > Rat(1, 2))
    throw std::invalid_argument("euler_factor: delta must lie in [0, 1/2]");
  Rat P(static_cast<unsigned long>(p));
  Rat num = Rat(15) * rat_pow(P, 3) + Rat(5) * P * P + Rat(5) * P - 1;
  Rat out = Rat(1) + num / ((Rat(1) - delta_i) * rat_pow(P - 1, 4));
  out.canonicalize();
  return out;
}

std::pair<Rat, Rat> euler_factor_series(uint64_t p, const Rat& delta_i, unsigned terms) {
  Rat s(0);
  Rat pk(1);
  Rat P(static_cast<unsigned long>(p));
  for (unsigned t = 1; t <= terms; ++t) {
    pk *= P;
    Rat coeff = Rat(4) * Rat(t) * Rat(t) * Rat(t) + Rat(6) * Rat(t) * Rat(t) + Rat(4) * Rat(t) + 1;
    s += coeff / pk;
  }
  // tail: coeff(t)/t^3 decreases, so past T the terms are dominated by a
  // geometric series with ratio ((T+2)/(T+1))^3 / p
  if (terms < 8) throw std::invalid_argument("euler_factor_series: need >= 8 terms");
  Rat T1 = Rat(static_cast<unsigned long>(terms + 1));
  Rat coeff_next = Rat(4) * T1 * T1 * T1 + Rat(6) * T1 * T1 + Rat(4) * T1 + 1;
  Rat ratio = Rat(rat_pow(Rat(static_cast<unsigned long>(terms + 2)), 3) /
                  rat_pow(T1, 3)) / P;
  if (ratio >= 1) throw std::invalid_argument("euler_factor_series: p too small for tail bound");
  Rat tail = (coeff_next / (pk * P)) / (Rat(1) - ratio);
  Rat scale = Rat(1) / (Rat(1) - delta_i);
  Rat lo = Rat(1) + scale * s;
  Rat hi = Rat(1) + scale * (s + tail);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Rat nu(const Int& m, const PrimePowerProfile& profile, const DeltaSchedule& sched) {
  Rat out(1);
  for (size_t j = 1; j <= profile.levels(); ++j) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), profile.prime(j)))
      out *= Rat(1) / (Rat(1) - sched.at(j));
  }
  out.canonicalize();
  return out;
}

namespace {

std::vector<Int> divisors_of(uint64_t n) {
  std::vector<Int> out;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.emplace_back(static_cast<unsigned long>(d));
      if (d != n / d) out.emplace_back(static_cast<unsigned long>(n / d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LemmaReport moment_bound_chain_check(const CoveringSystem& sys, const PrimePowerProfile& profile,
                                     const DeltaSchedule& sched) {
  if (!is_distinct(sys))
    throw std::invalid_argument("moment_bound_chain_check: moduli must be distinct");
  LemmaReport rep;
  rep.name = "moment-bound-chain";
  rep.claim = "P_i(B_i) <= moment bound <= lcm bound <= smooth sum <= Euler product";
  rep.inputs = "profile " + profile.to_string() + ", " + std::to_string(sys.size()) + " classes";

  DistortionState state = DistortionState::initial(profile);
  const size_t r = profile.levels();
  for (size_t i = 1; i <= r; ++i) {
    BadSet b = bad_set(sys, profile, i);
    const Rat& d = sched.at(i);
    Rat e4 = fourth_moment(state, b);
    DistortionState next = step(state, b, d);
    Rat pb = measure(next, b);
    Rat pb2 = measure_closed_form(state, b, d);
    std::string tag = "level " + std::to_string(i);
    rep.add_bool(tag + " direct = closed form", pb == pb2, rat_to_string(pb));
    rep.add_bool(tag + " mass preserved", next.mass() == 1, rat_to_string(next.mass()));
    if (d > 0) {
      const Rat one(1);
      Rat c = Rat(27) / (Rat(256) * (one - d) * rat_pow(d, 3));
      Rat v1 = c * e4;
      Rat p1 = Rat(static_cast<unsigned long>(profile.prime(i)));
      Rat inv_p4 = Rat(1) / rat_pow(p1 - 1, 4);
      // lcm bound over divisors of l_{i-1}: grouped by the lcm value m the
      // 4-tuple count is chi(m), so the quadruple sum collapses to
      // sum_{m | l_{i-1}} chi(m) nu(m) / m
      Rat divisor_sum(0);
      for (const Int& m : divisors_of(profile.level_modulus(i - 1)))
        divisor_sum += Rat(chi(m)) * nu(m, profile, sched) / Rat(m);
      Rat v2 = c * inv_p4 * divisor_sum;
      // smooth-m sum truncated at l_{i-1}: a superset of the divisors, so it
      // dominates the divisor sum term by term
      Rat smooth_sum(0);
      for (const Int& m :
           smooth_numbers_upto(Int(static_cast<unsigned long>(profile.level_modulus(i - 1))),
                               profile.prime(i) - 1))
        smooth_sum += Rat(chi(m)) * nu(m, profile, sched) / Rat(m);
      Rat v3 = c * inv_p4 * smooth_sum;
      // Euler product over all primes < p_i, delta = 0 off the profile
      Rat prod(1);
      for (uint64_t q : small_primes_upto(profile.prime(i) - 1)) {
        Rat dq(0);
        for (size_t j = 1; j <= r; ++j)
          if (profile.prime(j) == q) dq = sched.at(j);
        prod *= euler_factor(q, dq);
      }
      Rat v4 = c * inv_p4 * prod;
      rep.add_bool(tag + " P_i(B_i) <= moment bound", pb <= v1,
                   rat_to_string(pb) + " <= " + rat_to_string(v1));
      rep.add_bool(tag + " moment bound <= lcm bound", v1 <= v2,
                   rat_to_string(v1) + " <= " + rat_to_string(v2));
      rep.add_bool(tag + " lcm bound <= smooth sum", v2 <= v3,
                   rat_to_string(v2) + " <= " + rat_to_string(v3));
      rep.add_bool(tag + " smooth sum <= Euler product", v3 <= v4,
                   rat_to_string(v3) + " <= " + rat_to_string(v4));
    }
    state = std::move(next);
  }
  if (sched.size() > r)
    rep.add("levels beyond r", Verdict::Pass, "B_i empty, P_i(B_i) = 0",
            "bound holds for any delta in (0,1/2]");
  return rep;
}

}  // namespace coverlab
