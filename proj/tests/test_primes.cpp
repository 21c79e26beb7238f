#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "coverlab/primes.hpp"

using namespace coverlab;

namespace {

// naive oracle, independent of the segmented path
std::vector<uint64_t> naive_sieve(uint64_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<uint64_t> out;
  for (uint64_t i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return out;
}

const PrimeTable& table1e6() {
  static PrimeTable t = PrimeTable::sieve(15485864);  // p_{10^6}
  return t;
}

}  // namespace

TEST_CASE("sieve small examples") {
  PrimeTable t = PrimeTable::sieve(10);
  CHECK(t.primes() == std::vector<uint64_t>{2, 3, 5, 7});
  PrimeTable t30 = PrimeTable::sieve(30);
  CHECK(t30.count() == 10);
  CHECK(t30.prime(10) == 29);
  CHECK_THROWS_AS(PrimeTable::sieve(1), std::invalid_argument);
}

TEST_CASE("segmented sieve matches the naive oracle up to 1e7") {
  auto oracle = naive_sieve(10000000);
  PrimeTable t = PrimeTable::sieve(10000000);
  REQUIRE(t.count() == oracle.size());
  CHECK(t.primes() == oracle);
}

TEST_CASE("prime_stream resumes mid-range") {
  std::vector<uint64_t> full, tail;
  prime_stream(2, 10000, 1, [&](uint64_t, uint64_t p) { full.push_back(p); });
  // resume from an arbitrary cut
  uint64_t cut = 4000;
  size_t head = 0;
  while (head < full.size() && full[head] < cut) ++head;
  prime_stream(cut, 10000, head + 1, [&](uint64_t idx, uint64_t p) {
    CHECK(idx == tail.size() + head + 1);
    tail.push_back(p);
  });
  CHECK(std::vector<uint64_t>(full.begin() + head, full.end()) == tail);
}

TEST_CASE("prefix sums fold the declared summand") {
  const PrimeTable& t = table1e6();
  // exact rational cross-check at a small index
  Rat exact = t.reciprocal_prefix_exact(5);
  CHECK(exact == Rat(1, 2) + Rat(1, 3) + Rat(1, 5) + Rat(1, 7) + Rat(1, 11));
  CHECK(t.reciprocal_prefix(5, 128).contains(exact));
  // monotone in n
  RReal a = t.reciprocal_prefix(100, 128);
  RReal b = t.reciprocal_prefix(101, 128);
  CHECK(a.strictly_less(b));
  RReal la = t.loglog_prefix(50, 128);
  RReal lb = t.loglog_prefix(51, 128);
  CHECK(la.strictly_less(lb));  // summand positive from p = 3 on
}

TEST_CASE("nth prime bounds bracket the sieve") {
  const PrimeTable& t = table1e6();
  auto b20 = nth_prime_bounds(Int(20));
  CHECK(t.prime(20) == 71);
  CHECK(b20.tau1.strictly_less(Rat(71)));
  CHECK(b20.tau2.strictly_greater(Rat(71)));
  auto b1e6 = nth_prime_bounds(Int(1000000));
  CHECK(t.prime(1000000) == 15485863);
  CHECK(b1e6.tau1.strictly_less(Rat(15485863)));
  CHECK(b1e6.tau2.strictly_greater(Rat(15485863)));
  CHECK_THROWS_AS(nth_prime_bounds(Int(19)), std::invalid_argument);
}

TEST_CASE("tau1 < tau2, both increasing on a grid") {
  RReal prev1(256), prev2(256);
  bool first = true;
  for (long n : {20, 50, 100, 1000, 100000, 10000000}) {
    auto b = nth_prime_bounds(Int(n));
    CHECK(b.tau1.strictly_less(b.tau2));
    if (!first) {
      CHECK(prev1.strictly_less(b.tau1));
      CHECK(prev2.strictly_less(b.tau2));
    }
    prev1 = b.tau1;
    prev2 = b.tau2;
    first = false;
  }
}

TEST_CASE("tau2 stays under 1.07875 N log N at the lemma scale") {
  Int N = Int(15320302) * int_pow(Int(10), 14);
  auto b = nth_prime_bounds(N, 256);
  RReal Nr = RReal::from_int(N, 256);
  CHECK(b.tau2.strictly_less(RReal::from_decimal("1.07875", 256) * Nr * Nr.log()));
}

TEST_CASE("prime inequality validators") {
  const PrimeTable& t = table1e6();
  SUBCASE("interior samples all pass") {
    LemmaReport rep = validate_prime_inequalities(t, {100, 1000, 10000});
    CHECK(rep.verdict() == Verdict::Pass);
    for (const auto& c : rep.checks) CHECK(c.verdict != Verdict::Fail);
  }
  SUBCASE("sample below the validity ranges skips instead of failing") {
    LemmaReport rep = validate_prime_inequalities(t, {25});
    CHECK(rep.verdict() == Verdict::Pass);
    int skipped = 0;
    for (const auto& c : rep.checks)
      if (c.verdict == Verdict::Skipped) ++skipped;
    CHECK(skipped == 3);  // RS(3.18), RS(3.22), Dusart; theta still runs
  }
  SUBCASE("empty sample is a vacuous pass") {
    LemmaReport rep = validate_prime_inequalities(t, {});
    CHECK(rep.verdict() == Verdict::Pass);
  }
}

TEST_CASE("loglog lemma sweep to 2000 and the boundary below 44") {
  const PrimeTable& t = table1e6();
  LemmaReport rep = loglog_lemma_check(t, 2000);
  CHECK(rep.verdict() == Verdict::Pass);
  bool found = false;
  for (const auto& c : rep.checks) {
    if (c.label == "largest failing n < 44") {
      CHECK(c.value == "43");
      found = true;
    }
  }
  CHECK(found);
  CHECK_THROWS(loglog_lemma_check(t, 43));
}
