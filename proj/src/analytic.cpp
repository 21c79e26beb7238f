#include "coverlab/analytic.hpp"

#include "coverlab/distortion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace coverlab {

namespace {

const Rat& rat_c(const char* s) {
  // cache for the repeatedly used decimal constants
  static std::map<std::string, Rat> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, rat_from_string(s)).first;
  return it->second;
}

RReal rr(const char* s, mpfr_prec_t prec) { return RReal::from_rat(rat_c(s), prec); }

}  // namespace

DistortionConstants delta_prime_constants() {
  DistortionConstants k;
  k.delta_prime = Rat(95007347, 1520117553);
  k.eta = Rat(15) / (Rat(1) - k.delta_prime);
  k.eta.canonicalize();
  Int pp(static_cast<unsigned long>(kPrime1e9));
  k.eta_prime = k.eta * Rat(pp, pp - 1);
  k.eta_prime.canonicalize();
  return k;
}

RReal m0_product(size_t n, const PrimeTable& table, mpfr_prec_t prec) {
  if (n < 2) throw std::invalid_argument("m0_product: n must be >= 2");
  if (n - 1 > table.count()) throw std::out_of_range("m0_product: table too small");
  RReal prod = RReal::from_int(1L, prec);
  for (size_t j = 1; j < n; ++j)
    prod = prod * RReal::from_rat(euler_factor(table.prime(j), Rat(0)), prec);
  return prod;
}

LemmaReport sigma_bounds(size_t start_index, const PrimeTable& table, mpfr_prec_t prec) {
  LemmaReport rep;
  rep.name = "sigma-tail-bounds";
  rep.claim = "telescoping tails above p' and their numeric bounds";
  rep.inputs = "start index " + std::to_string(start_index) +
               ", sieve limit " + std::to_string(table.limit());

  // 1/(n...(n+k)) = (1/k)(1/(n...(n+k-1)) - 1/((n+1)...(n+k))), sampled
  for (auto [n0, k] : std::vector<std::pair<long, long>>{{7, 3}, {2, 2}, {10, 4}, {101, 2}}) {
    auto fall = [](long a, long k) {
      Rat r(1);
      for (long t = 0; t <= k; ++t) r *= Rat(a + t);
      return r;
    };
    Rat lhs = Rat(1) / fall(n0, k);
    Rat rhs = (Rat(1) / fall(n0, k - 1) - Rat(1) / fall(n0 + 1, k - 1)) / Rat(k);
    rep.add_bool("telescoping n=" + std::to_string(n0) + " k=" + std::to_string(k), lhs == rhs,
                 rat_to_string(lhs));
  }

  // closed-form tails at p' against the published decimal bounds, exact
  Int pp(static_cast<unsigned long>(kPrime1e9));
  Rat t2 = Rat(1) / Rat(pp - 2);
  Rat t3 = Rat(1) / (Rat(2) * Rat(pp - 3) * Rat(pp - 2));
  Rat t4 = Rat(1) / (Rat(3) * Rat(pp - 4) * Rat(pp - 3) * Rat(pp - 2));
  rep.add_bool("1/(p'-2) < 4.39e-11", t2 < rat_c("4.39e-11"), rat_to_string(t2));
  rep.add_bool("1/(2(p'-3)(p'-2)) < 9.62e-22", t3 < rat_c("9.62e-22"));
  rep.add_bool("1/(3(p'-4)(p'-3)(p'-2)) < 2.82e-32", t4 < rat_c("2.82e-32"));
  rep.add_bool("sigma2 < 1.464e-10", Rat(10, 3) * rat_c("4.39e-11") < rat_c("1.464e-10"));
  rep.add_bool("sigma3 < 3.85e-21", Rat(4) * rat_c("9.62e-22") < rat_c("3.85e-21"));
  rep.add_bool("sigma4 < 4.52e-32", Rat(8, 5) * rat_c("2.82e-32") < rat_c("4.52e-32"));
  rep.add_bool("sigma2+sigma3+sigma4 < 1.465e-10",
               rat_c("1.464e-10") + rat_c("3.85e-21") + rat_c("4.52e-32") < rat_c("1.465e-10"));

  // desk-scale analogue: the computable part of sum_{j >= start} 1/(p_j-1)^2
  // stays below the closed form 1/(p_start - 2)
  if (start_index == 0 || start_index > table.count())
    throw std::out_of_range("sigma_bounds: start index beyond table");
  RReal partial(prec);
  for (size_t j = start_index; j <= table.count(); ++j) {
    RReal pm1 = RReal::from_int(static_cast<long>(table.prime(j) - 1), prec);
    partial = partial + pm1.pow_ui(2).inv();
  }
  Rat closed = Rat(1) / Rat(Int(static_cast<unsigned long>(table.prime(start_index))) - 2);
  rep.add("desk tail partial sum", partial.strictly_less(closed) ? Verdict::Pass : Verdict::Fail,
          partial.to_string(15), "< 1/(p_start - 2) = " + rat_to_string(closed));
  return rep;
}

RReal reciprocal_prime_prefix(size_t n, const PrimeTable& table, mpfr_prec_t prec) {
  if (n == 0) throw std::invalid_argument("reciprocal_prime_prefix: n must be >= 1");
  return table.reciprocal_prefix(n - 1, prec);
}

RReal logp_over_p_prefix(size_t n, const PrimeTable& table, mpfr_prec_t prec) {
  if (n == 0) throw std::invalid_argument("logp_over_p_prefix: n must be >= 1");
  return table.log_over_p_prefix(n - 1, prec);
}

Rat m1_exact(size_t i, const PrimeTable& table) {
  if (i == 0 || i > table.count()) throw std::out_of_range("m1_exact: index beyond table");
  Rat prod(1);
  for (size_t j = 1; j < i; ++j)
    prod *= Rat(1) + Rat(1, static_cast<unsigned long>(table.prime(j) - 1));
  Rat out = prod / Rat(static_cast<unsigned long>(table.prime(i) - 1));
  out.canonicalize();
  return out;
}

RReal m1(size_t i, const PrimeTable& table, mpfr_prec_t prec) {
  if (i == 0 || i > table.count()) throw std::out_of_range("m1: index beyond table");
  RReal prod = RReal::from_int(1L, prec);
  for (size_t j = 1; j < i; ++j) {
    RReal pm1 = RReal::from_int(static_cast<long>(table.prime(j) - 1), prec);
    prod = prod * (RReal::from_int(1L, prec) + pm1.inv());
  }
  return prod / RReal::from_int(static_cast<long>(table.prime(i) - 1), prec);
}

RReal m1_product(size_t i_max, const PrimeTable& table, mpfr_prec_t prec) {
  if (i_max < 3) throw std::invalid_argument("m1_product: the product starts at i = 3");
  if (i_max > table.count()) throw std::out_of_range("m1_product: table too small");
  RReal one = RReal::from_int(1L, prec);
  // running prod_{j<i} (1 + 1/(p_j-1)), extended one factor per step
  RReal running = one;
  for (size_t j = 1; j < 3; ++j)
    running = running * (one + RReal::from_int(static_cast<long>(table.prime(j) - 1), prec).inv());
  RReal out = one;
  for (size_t i = 3; i <= i_max; ++i) {
    RReal m1i = running / RReal::from_int(static_cast<long>(table.prime(i) - 1), prec);
    RReal factor = one - m1i;
    if (!(factor.is_positive() && factor.strictly_less(Rat(1))))
      throw std::runtime_error("m1_product: factor 1 - M1(p_i) not certified inside (0,1) at i = " +
                               std::to_string(i));
    out = out * factor;
    running = running * (one + RReal::from_int(static_cast<long>(table.prime(i) - 1), prec).inv());
  }
  return out;
}

M1LowerBound m1_lower_bound(const Int& N, const PrimeTable& table, mpfr_prec_t prec) {
  if (N < 1000000000L) throw std::invalid_argument("m1_lower_bound: lemma requires N >= 10^9");
  M1LowerBound out;
  LemmaReport& rep = out.report;
  rep.name = "m1-lower-bound";
  rep.claim = "prod_{i=3}^{N-1} (1 - M1(p_i)) > 3.84636486599 p_N^-1.7826381 exp(-0.8913191/log p_N)";
  rep.inputs = "N = " + N.get_str();

  RReal gamma = RReal::euler_gamma(prec);
  RReal one = RReal::from_int(1L, prec);

  // RS (3.29) at sampled desk indices
  {
    std::vector<size_t> samples{63, 100, 1000, 10000};
    RReal running = one;
    size_t next = 0;
    std::sort(samples.begin(), samples.end());
    size_t maxi = std::min<size_t>(samples.back(), table.count());
    for (size_t j = 1; j < maxi && next < samples.size(); ++j) {
      running = running * (one + RReal::from_int(static_cast<long>(table.prime(j) - 1), prec).inv());
      size_t i = j + 1;  // running now holds prod_{j' < i}
      if (i == samples[next]) {
        RReal lp = RReal::from_int(static_cast<long>(table.prime(i - 1)), prec).log();
        RReal rhs = gamma.exp() * lp * (one + (2L * lp.pow_ui(2)).inv());
        rep.add_bool("RS(3.29) at i=" + std::to_string(i), running.strictly_less(rhs),
                     running.to_string(15), "< " + rhs.to_string(15));
        ++next;
      }
    }
  }

  // B_i/(p_i - 1) strictly decreasing on the desk grid
  {
    bool decreasing = true;
    size_t where = 0;
    RReal prev(prec);
    size_t hi = std::min<size_t>(10000, table.count());
    for (size_t i = 63; i <= hi; ++i) {
      RReal lp = RReal::from_int(static_cast<long>(table.prime(i)), prec).log();
      RReal bi = gamma.exp() * lp * (one + (2L * lp.pow_ui(2)).inv());
      RReal v = bi / RReal::from_int(static_cast<long>(table.prime(i) - 1), prec);
      if (i > 63 && !v.strictly_less(prev)) {
        decreasing = false;
        where = i;
        break;
      }
      prev = v;
    }
    rep.add_bool("B_i/(p_i-1) decreasing on 63..10^4", decreasing,
                 decreasing ? "" : "violated at i = " + std::to_string(where));
  }

  // fiber bound: e^gamma (p'/(p'-1)) (1 + 1/(2 log^2 p')) <= 1.782638
  RReal pp = RReal::from_int(Int(static_cast<unsigned long>(kPrime1e9)), prec);
  RReal lpp = pp.log();
  RReal cfiber = gamma.exp() * (pp / (pp - one)) * (one + (2L * lpp.pow_ui(2)).inv());
  rep.add_enclosure_less("fiber bound constant", cfiber, rat_c("1.782638"), "<= 1.782638");
  rep.add_bool("1.782638 * 1.000000001 <= 1.782638002",
               rat_c("1.782638") * rat_c("1.000000001") <= rat_c("1.782638002"));

  // exponent assembly: 1.782638002 (22.5175296 - E) >= 42.51611578, E = -1.3325822757
  Rat assembled = rat_c("1.782638002") * (rat_c("22.5175296") + rat_c("1.3325822757"));
  rep.add_bool("exp(42.51611578) assembly", assembled >= rat_c("42.51611578"),
               rat_to_string(assembled));
  RReal front = rr("1.319884728e-18", prec) * rr("42.51611578", prec).exp();
  rep.add_enclosure_greater("1.319884728e-18 exp(42.51611578)", front, rat_c("3.84636486599"),
                            "> 3.84636486599");

  // the bound itself, with p_N known exactly at N = 10^9, tau-enclosed beyond
  RReal pN(prec);
  if (N == 1000000000L) {
    pN = pp;
  } else {
    pN = nth_prime_bounds(N, prec).hull();
  }
  RReal lpN = pN.log();
  RReal expfac = (-(rr("0.8913191", prec)) / lpN).exp();
  out.value = rr("3.84636486599", prec) / pN.pow(rr("1.7826381", prec)) * expfac;
  if (N == 1000000000L) {
    bool enc = expfac.strictly_greater(rat_c("0.963317996")) &&
               expfac.strictly_less(rat_c("0.963317997"));
    rep.add_bool("exp(-0.8913191/log p') = 0.963317996...", enc, expfac.to_string(15));
  }
  rep.add("value", Verdict::Pass, out.value.to_string(20), "lower bound for the M1 product");
  return out;
}

TailPolynomial tail_polynomial() {
  TailPolynomial tp;
  tp.coeffs = {Rat(1, 3)};
  for (unsigned k = 1; k <= 16; ++k) {
    std::vector<Rat> next(k + 1, Rat(0));
    for (size_t c = 0; c < tp.coeffs.size(); ++c) next[c] = Rat(k, 3) * tp.coeffs[c];
    next[k] += Rat(1, 3);
    tp.coeffs = std::move(next);
  }
  return tp;
}

Rat TailPolynomial::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  acc.canonicalize();
  return acc;
}

RReal TailPolynomial::eval(const RReal& x) const {
  RReal acc(x.prec());
  for (size_t i = coeffs.size(); i-- > 0;)
    acc = acc * x + RReal::from_rat(coeffs[i], x.prec());
  return acc;
}

Rat TailPolynomial::g_at(const Rat& x) const {
  // G(x) = x^16 F(1/x)
  if (x == 0) return coeffs.back();
  Rat out = rat_pow(x, 16) * eval(Rat(1) / x);
  out.canonicalize();
  return out;
}

bool TailPolynomial::recurrence_holds() const {
  // 3F(u) - F'(u) = u^16 certifies F against the integral it came from
  std::vector<Rat> lhs(coeffs.size(), Rat(0));
  for (size_t i = 0; i < coeffs.size(); ++i) lhs[i] = Rat(3) * coeffs[i];
  for (size_t i = 1; i < coeffs.size(); ++i) lhs[i - 1] -= Rat(static_cast<unsigned long>(i)) * coeffs[i];
  for (size_t i = 0; i + 1 < lhs.size(); ++i)
    if (lhs[i] != 0) return false;
  if (lhs.back() != 1) return false;
  // and the stepwise recurrence F_k = u^k/3 + (k/3) F_{k-1}
  std::vector<Rat> fk{Rat(1, 3)};
  for (unsigned k = 1; k <= 16; ++k) {
    std::vector<Rat> next(k + 1, Rat(0));
    for (size_t c = 0; c < fk.size(); ++c) next[c] = Rat(k, 3) * fk[c];
    next[k] += Rat(1, 3);
    fk = std::move(next);
  }
  return fk == coeffs;
}

RReal tail_integral_bound(const Int& N, mpfr_prec_t prec) {
  if (N < 1000000000L) throw std::invalid_argument("tail_integral_bound: requires N >= 10^9");
  RReal pN = (N == 1000000000L) ? RReal::from_int(Int(static_cast<unsigned long>(kPrime1e9)), prec)
                                : nth_prime_bounds(N, prec).hull();
  RReal lg = pN.log();
  return rr("0.42722258614", prec) * lg.pow_ui(16) / pN.pow_ui(3);
}

TailEstimate tail_estimate(const Int& N, mpfr_prec_t prec,
                           const std::optional<RReal>& m0_enclosure) {
  if (N < 1000000000L) throw std::invalid_argument("tail_estimate: lemma requires N >= 10^9");
  TailEstimate out;
  LemmaReport& rep = out.report;
  rep.name = "tail-estimate";
  rep.claim = "sum_{i>=N} P_i(B_i) <= 0.657743 log^16 p_N / p_N^3";
  rep.inputs = "N = " + N.get_str();

  auto k = delta_prime_constants();
  RReal one = RReal::from_int(1L, prec);
  RReal pp = RReal::from_int(Int(static_cast<unsigned long>(kPrime1e9)), prec);
  RReal lpp = pp.log();

  rep.add_bool("eta' < 16", k.eta_prime < 16, rat_to_string(k.eta_prime));
  rep.add_enclosure_greater("log p' > alpha", lpp, rat_c("23.8501037"), "> 23.8501037");

  // sigma_1 constant: B + 1/(2 log^2 p') - 3.4332861 <= -3.17090988
  RReal s1c = rr("0.26149721284765", prec) + (2L * lpp.pow_ui(2)).inv() - rr("3.4332861", prec);
  rep.add_enclosure_less("sigma1 constant", s1c, rat_c("-3.17090988"), "<= -3.17090988");

  // product bound constant: M0 (log p_i)^{eta'} exp(-3.17090988 eta' + 1.465e-10 eta)
  // < 0.0033411 log^16 p_i, using eta' < 16
  RReal m0in(prec);
  if (m0_enclosure) {
    m0in = *m0_enclosure;
    rep.notes = "M0 from computed enclosure";
  } else {
    m0in = rr("36109748165730021774.850093", prec);
    rep.notes = "M0 endpoint taken from the published full-scale computation";
  }
  RReal expo = -(rr("3.17090988", prec) * RReal::from_rat(k.eta_prime, prec)) +
               RReal::from_rat(k.eta, prec) * rr("1.465e-10", prec);
  RReal prodc = m0in * expo.exp();
  rep.add_enclosure_less("product bound constant", prodc, rat_c("0.0033411"), "< 0.0033411");

  // constant chain down to the lemma's 0.657743
  Rat chain1 = Rat(27) * rat_c("0.0033411") /
               (Rat(256) * (Rat(1) - k.delta_prime) * rat_pow(k.delta_prime, 3));
  rep.add_bool("27*0.0033411/(256(1-d')d'^3) < 1.539578883", chain1 < rat_c("1.539578883"),
               rat_to_string(chain1));
  Int ppz(static_cast<unsigned long>(kPrime1e9));
  Rat p4 = rat_pow(Rat(ppz, ppz - 1), 4);
  rep.add_bool("(p'/(p'-1))^4 < 1.00000000018", p4 < rat_c("1.00000000018"));
  rep.add_bool("1.539578883 * 1.00000000018 <= 1.5395788833",
               rat_c("1.539578883") * rat_c("1.00000000018") <= rat_c("1.5395788833"));

  TailPolynomial tp = tail_polynomial();
  rep.add_bool("tail polynomial recurrence", tp.recurrence_holds());
  Rat p3 = rat_pow(Rat(ppz, ppz - 1), 3);
  rep.add_bool("(p'/(p'-1))^3 < beta", p3 < rat_c("1.000000000132"));
  Rat bG = rat_c("1.000000000132") * tp.g_at(Rat(1) / rat_c("23.8501037"));
  rep.add_bool("beta G(1/alpha) < 0.42722258614", bG < rat_c("0.42722258614"), rat_to_string(bG));
  rep.add_bool("1.5395788833 * 0.42722258614 < 0.657743",
               rat_c("1.5395788833") * rat_c("0.42722258614") < rat_c("0.657743"),
               rat_to_string(rat_c("1.5395788833") * rat_c("0.42722258614")));

  RReal pN = (N == 1000000000L) ? pp : nth_prime_bounds(N, prec).hull();
  RReal lg = pN.log();
  out.value = rr("0.657743", prec) * lg.pow_ui(16) / pN.pow_ui(3);
  rep.add("value", Verdict::Pass, out.value.to_string(20), "tail bound at p_N");
  return out;
}

Int difference_lemma_n(const Rat& Delta_in) {
  Rat Delta = Delta_in;
  Delta.canonicalize();
  if (Delta == Rat(1, 12)) {
    Int n(15320302);
    return n * int_pow(Int(10), 14);
  }
  Int scale = Int(28) * int_pow(Int(10), 19);
  return ceil_div(scale * Delta.get_den(), Delta.get_num());
}

RReal aux_min_bound(mpfr_prec_t prec) {
  // min over x > 0 of x^c / log^d(A x) at A = 2.8e20, c = 0.2173619,
  // d = 14.7826381; substituting u = log(Ax) gives e^{-c log A} e^{cu}/u^d,
  // minimized at u = d/c since e^{c(u - d/c)} >= (cu/d)^d
  const Rat c = rat_c("0.2173619");
  const Rat d = rat_c("14.7826381");
  const Int A = Int(28) * int_pow(Int(10), 19);
  RReal cr = RReal::from_rat(c, prec), dr = RReal::from_rat(d, prec);
  RReal logA = RReal::from_int(A, prec).log();
  RReal expo = -(cr * logA) + dr + dr * (cr.log() - dr.log());
  return expo.exp();
}

LemmaReport difference_bound(const Rat& Delta_in, mpfr_prec_t prec) {
  Rat Delta = Delta_in;
  Delta.canonicalize();
  if (Delta <= 0 || Delta > Rat(1, 12))
    throw std::invalid_argument("difference_bound: Delta must lie in (0, 1/12]");
  LemmaReport rep;
  rep.name = "difference-bound";
  rep.claim = "Delta prod(1-M1) - sum P_i(B_i) exceeds the lemma threshold";
  rep.inputs = "Delta = " + rat_to_string(Delta);

  const Int N = difference_lemma_n(Delta);
  rep.inputs += ", N = " + N.get_str();
  auto tb = nth_prime_bounds(N, prec);
  RReal one = RReal::from_int(1L, prec);

  rep.add_bool("5.8478233 * 0.657743 <= 3.84636486599",
               rat_c("5.8478233") * rat_c("0.657743") <= rat_c("3.84636486599"));

  // f at tau1 and the envelope at tau2
  auto f_at = [&](const RReal& x) {
    RReal lg = x.log();
    return rr("5.8478233", prec) * RReal::from_rat(Delta, prec) * x.pow(rr("1.2173619", prec)) /
           lg.pow_ui(16) * (-(rr("0.8913191", prec)) / lg).exp();
  };
  RReal f1 = f_at(tb.tau1);
  RReal envelope = rr("0.657743", prec) * tb.tau2.log().pow_ui(16) / tb.tau2.pow_ui(3);
  RReal value = envelope * (f1 - one);
  rep.add("bound value", Verdict::Pass, value.to_string(20), "(0.657743 log^16 tau2/tau2^3)(f(tau1)-1)");

  // tau2 < 1.07875 N log N at this N
  RReal Nr = RReal::from_int(N, prec);
  rep.add_bool("tau2 < 1.07875 N log N",
               tb.tau2.strictly_less(rr("1.07875", prec) * Nr * Nr.log()),
               tb.tau2.to_string(15));

  if (Delta == Rat(1, 12)) {
    rep.add_enclosure_greater("threshold", value, rat_c("4.7596769e-50"), "> 4.7596769e-50");
  } else {
    // general-branch sub-checks
    Int Nmin = Int(336) * int_pow(Int(10), 19);
    RReal nminr = RReal::from_int(Nmin, prec);
    rep.add_bool("N >= 3.36e21", N >= Nmin);
    RReal lle = one + nminr.log().log() / nminr.log();
    rep.add_enclosure_less("1 + loglog/log at Nmin", lle, rat_c("1.07875"), "< 1.07875");
    RReal e098 = (-(rr("0.8913191", prec)) / nth_prime_bounds(Nmin, prec).tau1.log()).exp();
    rep.add_enclosure_greater("exp(-0.8913191/log tau1(Nmin))", e098, rat_c("0.98348"), "> 0.98348");
    rep.add_bool("5.8478233 * 0.98348 >= 5.7512",
                 rat_c("5.8478233") * rat_c("0.98348") >= rat_c("5.7512"));
    rep.add_bool("5.7512 / 1.07875^16 >= 1.71",
                 rat_c("5.7512") / rat_pow(rat_c("1.07875"), 16) >= rat_c("1.71"));
    RReal pw = RReal::from_int(Int(28) * int_pow(Int(10), 19), prec).pow(rr("1.2173619", prec));
    rep.add_enclosure_greater("1.71 (2.8e20)^1.2173619", rr("1.71", prec) * pw,
                              rat_c("1.33225e25"), ">= 1.33225e25");
    RReal gm = aux_min_bound(prec);
    rep.add_enclosure_greater("aux function minimum", gm, rat_c("7.68e-26"), "> 7.68e-26");
    rep.add_bool("1.33225e25 * 7.68e-26 > 1.023",
                 rat_c("1.33225e25") * rat_c("7.68e-26") > rat_c("1.023"));
    rep.add_enclosure_greater("f(tau1) > 1.023", f1, rat_c("1.023"), "> 1.023");
    Rat threshold = rat_c("5.9329e-42") * rat_pow(Delta, 3);
    rep.add_enclosure_greater("threshold", value, threshold,
                              "> 5.9329e-42 Delta^3 = " + rat_to_string(threshold));
  }
  return rep;
}

LemmaReport smooth_tail_bound(const Rat& Delta_in, mpfr_prec_t prec) {
  Rat Delta = Delta_in;
  Delta.canonicalize();
  if (Delta <= 0 || Delta > Rat(1, 12))
    throw std::invalid_argument("smooth_tail_bound: Delta must lie in (0, 1/12]");
  LemmaReport rep;
  rep.name = "smooth-tail-bound";
  rep.claim = "sum over p_N-smooth m > K of 1/m is below the lemma bound";
  rep.inputs = "Delta = " + rat_to_string(Delta);

  const Int N = difference_lemma_n(Delta);
  rep.inputs += ", N = " + N.get_str();
  RReal one = RReal::from_int(1L, prec);
  RReal Nr = RReal::from_int(N, prec);
  RReal lgN = Nr.log();
  RReal NlgN = Nr * lgN;
  auto tb = nth_prime_bounds(N, prec);
  RReal lgT2 = tb.tau2.log();
  RReal gamma = RReal::euler_gamma(prec);

  // E < 0.08: the three contributions, then the sum
  RReal e1 = lgT2 / NlgN;
  rep.add_enclosure_less("log tau2/(N log N)", e1, rat_c("1e-21"), "< 1e-21");
  rep.add_bool("tau2 <= 1.08 N log N", tb.tau2.strictly_less(rr("1.08", prec) * NlgN));
  RReal e2 = rr("0.0077629", prec) * tb.tau2 / (lgT2 * NlgN);
  rep.add_enclosure_less("theta term", e2, rat_c("0.00016"), "< 0.00016");
  RReal e3 = lgN.log() / lgN;
  rep.add_enclosure_less("loglogN/logN", e3, rat_c("0.07972"), "< 0.07972");
  rep.add_enclosure_less("E", e1 + e2 + e3, rat_c("0.08"), "< 0.08");

  if (Delta == Rat(1, 12)) {
    const Rat c = rat_c("0.02250022");
    RReal cr = RReal::from_rat(c, prec);
    // Mertens product over the first N primes
    RReal mert = gamma.exp() * lgT2 * (one + (2L * lgT2.pow_ui(2)).inv());
    rep.add_enclosure_less("Mertens product", mert, Rat(94), "< 94");
    // log10 of 94 (e(c+1.08))^N / N^{cN}
    RReal ln10 = RReal::from_int(10L, prec).log();
    RReal lgbound = (RReal::from_int(94L, prec).log() +
                     Nr * (one + (cr + rr("1.08", prec)).log()) - cr * Nr * lgN) / ln10;
    Rat neg13 = -rat_pow(Rat(10), 13);
    rep.add_enclosure_less("log10 tail bound", lgbound, neg13, "< -10^13");
    // K = N^{cN} stays below the stated exp(1.681527e21)
    RReal cNlgN = cr * Nr * lgN;
    Rat Kexp = rat_c("1.681527e21");
    rep.add_enclosure_less("c N log N <= stated K exponent", cNlgN, Kexp, "<= 1.681527e21");
    rep.add_bool("Theorem exponent doubling", Rat(2) * Kexp == rat_c("3.363054e21"),
                 "2 * 1.681527e21 = 3.363054e21");
    rep.add("epsilon = K^-2", Verdict::Pass, "exp(-3.363054e21)", "headline density gap");
    // tail far below the difference-lemma margin: -10^13 << log10(4.7596769e-50)
    rep.add_bool("tail below difference margin", neg13 < Rat(-50),
                 "log10 bound < -10^13 < log10(4.7596769e-50)");
  } else {
    const Rat c = rat_c("0.022143");
    RReal cr = RReal::from_rat(c, prec);
    Int Nmin = Int(336) * int_pow(Int(10), 19);
    rep.add_bool("N >= 3.36e21", N >= Nmin);
    rep.add_enclosure_less("1/log N", lgN.inv(), rat_c("0.02018"), "<= 0.02018");
    // Mertens product via log p_N < 1.0803 log N
    RReal lgpN_up = rr("1.0803", prec) * lgN;
    rep.add_bool("log tau2 < 1.0803 log N", lgT2.strictly_less(lgpN_up));
    RReal mert = gamma.exp() * (lgpN_up + (2L * lgpN_up).inv());
    rep.add_bool("Mertens product < 1.92443 log N",
                 mert.strictly_less(rr("1.92443", prec) * lgN));
    // exponent of the tail bound per unit N log N
    RReal expr = -cr + lgN.inv() + (cr + rr("1.08", prec)).log() / lgN + lgN.log() / NlgN +
                 rr("1.92443", prec).log() / NlgN;
    rep.add_enclosure_less("tail exponent rate", expr, rat_c("-3.645e-7"), "<= -3.645e-7");
    // rewrite in terms of Delta
    RReal ldel = RReal::from_rat(Delta, prec).log();
    RReal dinv = RReal::from_rat(Rat(1) / Delta, prec);
    RReal target = (rr("-4.77e15", prec) + rr("1.02e14", prec) * ldel) * dinv;
    RReal actual = rr("-3.645e-7", prec) * NlgN;
    rep.add_bool("tail exponent <= (-4.77e15 + 1.02e14 log Delta)/Delta",
                 actual.strictly_less(target),
                 actual.to_string(15) + " vs " + target.to_string(15));
    // K form and the theorem exponent
    RReal kexp = cr * NlgN;
    RReal kstated = (rr("2.923e20", prec) - rr("6.21e18", prec) * ldel) * dinv;
    rep.add_bool("c N log N <= stated K exponent", kexp.strictly_less(kstated),
                 kexp.to_string(15));
    rep.add_bool("Theorem exponent doubling",
                 Rat(2) * rat_c("2.923e20") == rat_c("5.846e20") &&
                     Rat(2) * rat_c("6.21e18") == rat_c("1.242e19"));
    // comparison with the difference-lemma threshold
    RReal diff_log = (rr("5.9329e-42", prec) * RReal::from_rat(rat_pow(Delta, 3), prec)).log();
    rep.add_bool("tail below difference margin", target.strictly_less(diff_log),
                 target.to_string(10) + " < " + diff_log.to_string(10));
    rep.add("K", Verdict::Pass, "exp(" + kexp.to_string(15) + ")", "K = N^{cN}");
  }
  return rep;
}

RReal granville_smooth_count_bound(const RReal& X, size_t N, const PrimeTable& table,
                                   mpfr_prec_t prec) {
  if (N == 0 || N > table.count())
    throw std::out_of_range("granville_smooth_count_bound: N beyond table");
  RReal logXt = X.log() + table.theta_prefix(N, prec);
  RReal lg(prec);  // log of the bound
  for (size_t k = 2; k <= N; ++k)
    lg = lg - RReal::from_int(static_cast<long>(k), prec).log();
  for (size_t j = 1; j <= N; ++j)
    lg = lg + (logXt / RReal::from_int(static_cast<long>(table.prime(j)), prec).log()).log();
  return lg.exp();
}

Int smooth_count_exact(const Int& limit, uint64_t P) {
  if (limit < 1) return Int(0);
  auto primes = small_primes_upto(P);
  std::function<Int(size_t, Int)> rec = [&](size_t idx, Int rem) -> Int {
    if (idx == primes.size()) return Int(1);
    Int total(0);
    Int v(1);
    while (v <= rem) {
      total += rec(idx + 1, rem / v);
      v *= static_cast<unsigned long>(primes[idx]);
    }
    return total;
  };
  return rec(0, limit);
}

}  // namespace coverlab
