#include "coverlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coverlab {

DivisionMinimalSet division_minimal(const std::vector<Int>& moduli, uint64_t p) {
  if (moduli.empty()) throw std::invalid_argument("division_minimal: empty set");
  for (const Int& m : moduli) {
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p))
      throw std::invalid_argument("division_minimal: " + m.get_str() + " not divisible by " +
                                  std::to_string(p));
    if (!is_smooth(m, p))
      throw std::invalid_argument("division_minimal: " + m.get_str() + " not " +
                                  std::to_string(p) + "-smooth");
  }
  DivisionMinimalSet out;
  out.source = moduli;
  std::set<Int> uniq(moduli.begin(), moduli.end());
  for (const Int& m : uniq) {
    bool minimal = true;
    for (const Int& other : uniq) {
      if (other != m && mpz_divisible_p(m.get_mpz_t(), other.get_mpz_t())) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.minimal.push_back(m);
      out.reduced.push_back(m / static_cast<unsigned long>(p));
    }
  }
  return out;
}

Rat inclusion_exclusion_sum(const std::vector<Int>& reduced, size_t budget) {
  if (reduced.empty()) throw std::invalid_argument("inclusion_exclusion_sum: empty set");
  if (reduced.size() > budget)
    throw std::runtime_error("inclusion_exclusion_sum: subset enumeration budget exceeded");
  const size_t k = reduced.size();
  Rat total(0);
  for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
    Int l(1);
    for (size_t j = 0; j < k; ++j)
      if (mask & (size_t{1} << j)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), reduced[j].get_mpz_t());
    int sign = (__builtin_popcountll(mask) % 2 == 1) ? 1 : -1;
    total += Rat(Int(sign), l);
  }
  total.canonicalize();
  return total;
}

LemmaReport rogers_check(const std::vector<Congruence>& classes, uint64_t budget) {
  LemmaReport rep;
  rep.name = "rogers-density";
  rep.claim = "union density >= density of the zero-residue union on the same moduli";
  rep.inputs = std::to_string(classes.size()) + " classes";
  std::vector<Congruence> zeros;
  zeros.reserve(classes.size());
  for (const auto& c : classes) zeros.emplace_back(Int(0), c.modulus);
  Rat given = covered_density(classes, budget);
  Rat zero = covered_density(zeros, budget);
  rep.add_bool("density comparison", given >= zero,
               rat_to_string(given) + " >= " + rat_to_string(zero));
  return rep;
}

Rat multexp_upper_bound(const std::vector<Int>& relevant_moduli, uint64_t p,
                        const Int& corpus_lcm) {
  if (relevant_moduli.empty()) return Rat(0);
  auto dm = division_minimal(relevant_moduli, p);
  const size_t k = dm.minimal.size();
  if (k > 20) throw std::runtime_error("multexp_upper_bound: too many minimal moduli");
  // S(q) = sum of 1/n over p-smooth n | corpus_lcm with q | n
  //      = (1/q) sigma(x_p)/x_p with x_p the p-smooth part of corpus_lcm/q
  auto S = [&](const Int& q) {
    if (!mpz_divisible_p(corpus_lcm.get_mpz_t(), q.get_mpz_t()))
      throw std::invalid_argument("multexp_upper_bound: modulus outside the corpus lcm");
    Int rest = corpus_lcm / q;
    Int xp(1);
    for (uint64_t pr : small_primes_upto(p)) {
      while (mpz_divisible_ui_p(rest.get_mpz_t(), pr)) {
        rest /= pr;
        xp *= pr;
      }
    }
    Rat s(0);
    for (Int d(1); d * d <= xp; ++d) {
      if (mpz_divisible_p(xp.get_mpz_t(), d.get_mpz_t())) {
        s += Rat(Int(1), q * d);
        Int e = xp / d;
        if (e != d) s += Rat(Int(1), q * e);
      }
    }
    s.canonicalize();
    return s;
  };
  Rat total(0);
  for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
    Int l(1);
    for (size_t j = 0; j < k; ++j)
      if (mask & (size_t{1} << j))
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dm.minimal[j].get_mpz_t());
    int sign = (__builtin_popcountll(mask) % 2 == 1) ? 1 : -1;
    total += Rat(Int(sign)) * S(l);
  }
  total.canonicalize();
  return total;
}

long shift_cover_witness(const Int& n, const Int& a_j, const Int& m_jp, uint64_t p, unsigned e,
                         const Int& a, const Int& m) {
  if (e == 0) throw std::invalid_argument("shift_cover_witness: e must be >= 1");
  Int pe = int_pow(Int(static_cast<unsigned long>(p)), e);
  Int pem1 = pe / static_cast<unsigned long>(p);
  // hypotheses: p^{e-1} || m_jp, n = a_j (mod m_jp), n = a (mod m), p does not divide m
  if (!mpz_divisible_p(m_jp.get_mpz_t(), pem1.get_mpz_t()) ||
      mpz_divisible_p(m_jp.get_mpz_t(), pe.get_mpz_t()))
    throw std::invalid_argument("shift_cover_witness: p^{e-1} must exactly divide m_j'");
  if (mpz_divisible_ui_p(m.get_mpz_t(), p))
    throw std::invalid_argument("shift_cover_witness: p must not divide m");
  Int mj = m_jp * static_cast<unsigned long>(p);
  if (!Congruence(a_j, m_jp).contains(n))
    throw std::invalid_argument("shift_cover_witness: n not in a_j (mod m_j')");
  if (!Congruence(a, m).contains(n))
    throw std::invalid_argument("shift_cover_witness: n not in a (mod m)");
  for (long t = 1; t <= static_cast<long>(p); ++t) {
    Int cand = n + Int(t) * m_jp * m;
    Int diff = cand - a_j;
    if (mpz_divisible_p(diff.get_mpz_t(), pe.get_mpz_t())) {
      // the witness lies in both classes
      if (!Congruence(a_j, mj).contains(cand) || !Congruence(a, m).contains(cand))
        throw std::runtime_error("shift_cover_witness: witness verification failed");
      return t;
    }
  }
  throw std::runtime_error("shift_cover_witness: no witness found (hypotheses violated?)");
}

namespace {

// Static constructor for small-minimum-modulus coverings. Building blocks:
//  - tower: nested half-covers of a class u (mod s) with moduli s*2^k,
//    leaving one residual subclass (exact, no excess);
//  - block: the five-class system {2s,3s,4s,6s,12s} scaled into a class,
//    covering it completely with excess (1/3)/s;
//  - ladder: waste-covers of the bottom subclasses by classes with smaller
//    divisor moduli on fresh 5-lanes.
// Lane windows are staggered statically (tower depths drop by 3 per descent
// level) so all moduli are distinct; the registry asserts it.
class MinModulusBuilder {
 public:
  std::vector<Congruence> build(unsigned m0, unsigned depth) {
    if (m0 < 2 || m0 > 4) throw std::invalid_argument("minimum modulus must be 2, 3 or 4");
    out_.clear();
    used_.clear();
    if (m0 == 2) {
      // plain binary tower from modulus 2 plus one terminal block
      Int cur(0), modulus(1);
      emit(Int(1), Int(2));
      cur = 0;
      modulus = 2;
      for (unsigned k = 0; k < depth; ++k) {
        emit(cur + modulus, modulus * 2);
        modulus *= 2;
      }
      block(cur, modulus);
    } else if (m0 == 3) {
      build3(depth, Int(1));
    } else {
      build4(depth);
    }
    return out_;
  }

 private:
  void take(const Int& m) {
    if (!used_.insert(m).second)
      throw std::runtime_error("construction failure: modulus reused " + m.get_str());
  }

  void emit(const Int& a, const Int& m) {
    take(m);
    out_.emplace_back(a, m);
  }

  // five-class block scaled into a (mod s)
  void block(const Int& a, const Int& s) {
    const long mods[5] = {2, 3, 4, 6, 12};
    const long shifts[5] = {0, 0, 1, 5, 7};
    for (int i = 0; i < 5; ++i) emit(a + s * shifts[i], s * mods[i]);
  }

  // tower of the given depth inside u (mod s), then a terminal block
  void tower_block(Int u, Int s, unsigned depth) {
    for (unsigned k = 0; k < depth; ++k) {
      emit(u, s * 2);
      u += s;
      s *= 2;
    }
    block(u, s);
  }

  // minimum modulus 3 covering, all moduli scaled by `scale`;
  // depth D >= 2 controls the excess (roughly 2.5 * 3^-D)
  void build3(unsigned D, const Int& scale) {
    if (D < 2) throw std::invalid_argument("builder: descent depth must be >= 2");
    scale_ = scale;
    const unsigned a = 3 * D + 1;
    emit_scaled(Int(0), Int(3));
    tower_block_scaled(Int(1), Int(3), a);
    // ternary descent: cover one subclass directly, one by tower+block,
    // defer the third
    Int U(2), V(3);
    for (unsigned l = 0; l < D; ++l) {
      Int sigma = V * 3;
      emit_scaled(U, sigma);
      tower_block_scaled(U + V, sigma, a - 3 * (l + 1));
      U += 2 * V;
      V = sigma;
    }
    // bottom: five-way split on fresh 5-lanes; the last three subclasses are
    // waste-covered by divisor-ladder classes
    Int W = V;  // 3^(D+1)
    emit_scaled(U, 5 * W);
    tower_block_scaled(U + W, 5 * W, 1);
    Int rung = 5 * int_pow(Int(3), D);
    emit_scaled(U + 2 * W, rung);
    emit_scaled(U + 3 * W, rung / 3);
    emit_scaled(U + 4 * W, rung / 9);
    scale_ = 1;
  }

  // minimum modulus 4: an odd tower (1 mod 4, 3 mod 8, ...) plus the
  // minimum-modulus-3 system scaled by 2 for the evens
  void build4(unsigned D) {
    const unsigned a = 3 * D + 1;
    const unsigned c = a + 4;
    Int cur(1), modulus(2);
    for (unsigned k = 2; k <= c; ++k) {
      emit(cur, modulus * 2);
      cur += modulus;
      modulus *= 2;
    }
    block(cur, modulus);
    build3(D, Int(2));
  }

  void emit_scaled(const Int& a, const Int& m) { emit(a * scale_, m * scale_); }

  void tower_block_scaled(Int u, Int s, unsigned depth) {
    for (unsigned k = 0; k < depth; ++k) {
      emit_scaled(u, s * 2);
      u += s;
      s *= 2;
    }
    // scaled block
    const long mods[5] = {2, 3, 4, 6, 12};
    const long shifts[5] = {0, 0, 1, 5, 7};
    for (int i = 0; i < 5; ++i) emit_scaled(u + s * shifts[i], s * mods[i]);
  }

  Int scale_{1};
  std::set<Int> used_;
  std::vector<Congruence> out_;
};

}  // namespace

CoveringSystem build_small_min_modulus_covering(unsigned m0, const Rat& epsilon_in,
                                                uint64_t scan_budget) {
  Rat epsilon = epsilon_in;
  epsilon.canonicalize();
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  MinModulusBuilder builder;
  // smallest depth whose measured excess fits; the lcm of the produced
  // moduli grows ~24x per step, so the scan budget caps how small epsilon
  // can get
  for (unsigned depth = 2; depth <= 40; ++depth) {
    std::vector<Congruence> classes = builder.build(m0, depth);
    CoveringSystem sys(std::move(classes));
    if (reciprocal_sum(sys) >= Rat(1) + epsilon) continue;
    Int l = lcm_moduli(sys);
    if (!l.fits_ulong_p() || l.get_ui() > scan_budget)
      throw std::runtime_error(
          "epsilon requires a construction beyond the scan budget; raise the budget");
    if (!is_covering(sys, scan_budget))
      throw std::runtime_error("construction failure: oracle rejected covering");
    if (!is_distinct(sys)) throw std::runtime_error("construction failure: moduli not distinct");
    if (min_modulus(sys) != Int(m0))
      throw std::runtime_error("construction failure: wrong minimum modulus");
    return sys;
  }
  throw std::runtime_error("construction failure: no feasible depth");
}

CoveringSystem greedy_power2_covering(unsigned t, size_t steps,
                                      const std::function<Int(size_t)>& ordering) {
  if (steps == 0) throw std::invalid_argument("greedy_power2_covering: steps must be >= 1");
  CoveringSystem sys;
  size_t next_index = 1;
  for (size_t j = 1; j <= steps; ++j) {
    Int modulus = int_pow(Int(2), t + static_cast<unsigned long>(j));
    // smallest i whose integer is not yet covered
    size_t i = next_index;
    while (true) {
      Int k = ordering(i);
      bool covered = false;
      for (const auto& c : sys.classes())
        if (c.contains(k)) {
          covered = true;
          break;
        }
      if (!covered) break;
      ++i;
    }
    sys.add(Congruence(ordering(i), modulus));
    next_index = i + 1;
  }
  return sys;
}

Int default_integer_ordering(size_t i) {
  // 0, 1, -1, 2, -2, ...
  if (i == 0) throw std::invalid_argument("ordering is 1-based");
  if (i == 1) return Int(0);
  long half = static_cast<long>(i / 2);
  return (i % 2 == 0) ? Int(half) : Int(-half);
}

}  // namespace coverlab
