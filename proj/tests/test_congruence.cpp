#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coverlab/congruence.hpp"

using namespace coverlab;

namespace {

CoveringSystem classic5() {
  return CoveringSystem({{Int(0), Int(2)},
                         {Int(0), Int(3)},
                         {Int(1), Int(4)},
                         {Int(5), Int(6)},
                         {Int(7), Int(12)}});
}

}  // namespace

TEST_CASE("congruence normalization") {
  Congruence c(Int(-1), Int(4));
  CHECK(c.residue == 3);
  CHECK(c.contains(Int(7)));
  CHECK(c.contains(Int(-5)));
  CHECK_THROWS_AS(Congruence(Int(0), Int(0)), std::invalid_argument);
}

TEST_CASE("lcm of moduli") {
  CHECK(lcm_moduli(CoveringSystem({{Int(0), Int(2)}, {Int(1), Int(2)}})) == 2);
  CHECK(lcm_moduli(classic5()) == 12);
  CHECK(lcm_moduli(CoveringSystem({{Int(0), Int(1)}})) == 1);
  CHECK_THROWS_AS(lcm_moduli(CoveringSystem()), std::invalid_argument);
}

TEST_CASE("covering / distinct / exact") {
  CHECK(is_covering(CoveringSystem({{Int(0), Int(2)}, {Int(1), Int(2)}})));
  CHECK(is_exact(CoveringSystem({{Int(0), Int(2)}, {Int(1), Int(2)}})));
  CHECK(is_covering(classic5()));
  CHECK(is_distinct(classic5()));
  CHECK_FALSE(is_exact(classic5()));
  CHECK_FALSE(is_covering(CoveringSystem({{Int(0), Int(2)}, {Int(0), Int(3)}})));
  CoveringSystem exact_notdistinct({{Int(1), Int(2)}, {Int(2), Int(4)}, {Int(0), Int(4)}});
  CHECK(is_exact(exact_notdistinct));
  CHECK_FALSE(is_distinct(exact_notdistinct));
  CHECK(min_modulus(classic5()) == 2);
}

TEST_CASE("scan budget rejection") {
  CoveringSystem big({{Int(0), Int(1000000007)}});
  CHECK_THROWS(scan(big, 100000000));
}

TEST_CASE("reciprocal sums") {
  CHECK(reciprocal_sum(classic5()) == Rat(4, 3));
  CHECK(reciprocal_sum(CoveringSystem({{Int(0), Int(1)}})) == 1);
  CHECK(reciprocal_sum(CoveringSystem({{Int(1), Int(2)}, {Int(2), Int(4)}, {Int(0), Int(4)}})) == 1);
}

TEST_CASE("covered density") {
  CHECK(covered_density({{Int(0), Int(2)}, {Int(0), Int(3)}}) == Rat(2, 3));
  CHECK(covered_density({}) == 0);
  CHECK(covered_density({{Int(0), Int(2)}, {Int(1), Int(2)}}) == 1);
  CHECK(covered_density({{Int(5), Int(7)}}) == Rat(1, 7));
}

TEST_CASE("delta of the 3-smooth subsystem") {
  CoveringSystem s({{Int(0), Int(2)}, {Int(0), Int(3)}, {Int(2), Int(5)}});
  CHECK(delta(s) == Rat(1, 3));
  CHECK(delta(classic5()) == 0);
  CoveringSystem none({{Int(0), Int(5)}, {Int(1), Int(7)}});
  CHECK(delta(none) == 1);
}

TEST_CASE("smooth reciprocal mass") {
  CHECK(smooth_reciprocal_mass(3, Int(5)) == Rat(11, 12));
  CHECK(smooth_reciprocal_mass(3, Int(1)) == 3);
  CHECK(smooth_reciprocal_mass(5, Int(2)) == Rat(11, 4));
  CHECK_THROWS_AS(smooth_reciprocal_mass(4, Int(1)), std::invalid_argument);
}

TEST_CASE("density additivity on random small systems") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> mod_pick(1, 18);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Congruence> A, B, AB;
    int na = 1 + iter % 3, nb = 1 + (iter / 3) % 3;
    for (int i = 0; i < na; ++i) {
      int m = mod_pick(rng);
      A.emplace_back(Int(static_cast<int>(rng() % m)), Int(m));
    }
    for (int i = 0; i < nb; ++i) {
      int m = mod_pick(rng);
      B.emplace_back(Int(static_cast<int>(rng() % m)), Int(m));
    }
    // A cap B as pairwise congruence intersections (CRT where solvable)
    std::vector<Congruence> inter;
    for (const auto& ca : A)
      for (const auto& cb : B) {
        Int g, l;
        mpz_gcd(g.get_mpz_t(), ca.modulus.get_mpz_t(), cb.modulus.get_mpz_t());
        Int diff = cb.residue - ca.residue;
        if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) continue;
        // solve x = ca (mod ma), x = cb (mod mb) by scanning the small lcm
        mpz_lcm(l.get_mpz_t(), ca.modulus.get_mpz_t(), cb.modulus.get_mpz_t());
        for (Int x(0); x < l; ++x)
          if (ca.contains(x) && cb.contains(x)) {
            inter.emplace_back(x, l);
            break;
          }
      }
    std::vector<Congruence> uni = A;
    uni.insert(uni.end(), B.begin(), B.end());
    CHECK(covered_density(uni) ==
          covered_density(A) + covered_density(B) - covered_density(inter));
  }
}

TEST_CASE("covering is invariant under translation") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    CoveringSystem base = classic5();
    Int shift(static_cast<long>(rng() % 1000));
    std::vector<Congruence> shifted;
    for (const auto& c : base.classes()) shifted.emplace_back(c.residue + shift, c.modulus);
    CHECK(is_covering(CoveringSystem(shifted)) == is_covering(base));
  }
  // also on a non-covering
  CoveringSystem nc({{Int(0), Int(2)}, {Int(0), Int(3)}});
  std::vector<Congruence> shifted;
  for (const auto& c : nc.classes()) shifted.emplace_back(c.residue + 5, c.modulus);
  CHECK_FALSE(is_covering(CoveringSystem(shifted)));
}

TEST_CASE("json round trip and parse errors") {
  CoveringSystem sys = classic5();
  CoveringSystem back = CoveringSystem::from_json_string(sys.to_json_string());
  CHECK(back.classes().size() == 5);
  CHECK(back.classes()[4].residue == 7);
  CHECK_THROWS(CoveringSystem::from_json_string("{\"a\": 1}"));
  CHECK_THROWS(CoveringSystem::from_json_string("[{\"a\": 1}]"));
  CHECK_THROWS(CoveringSystem::from_json_string("not json"));
}
