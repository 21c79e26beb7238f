#include "coverlab/rational.hpp"

#include <cctype>

namespace coverlab {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat r(s);  // gmp accepts "p/q"
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
  }
  // decimal or scientific literal, e.g. "0.42722258614", "4.39e-11"
  std::string mant = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    exp10 = std::stol(s.substr(epos + 1));
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, neg = false;
  for (size_t i = 0; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '-' && i == 0) { neg = true; continue; }
    if (c == '+' && i == 0) continue;
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal: " + s);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad decimal: " + s);
    digits.push_back(c);
    if (seen_dot) ++frac_digits;
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal: " + s);
  Int num(digits, 10);  // explicit base: leading zeros must not mean octal
  if (neg) num = -num;
  long e = exp10 - frac_digits;
  Rat r(num);
  if (e > 0) r *= Rat(int_pow(Int(10), static_cast<unsigned long>(e)));
  else if (e < 0) r /= Rat(int_pow(Int(10), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
  r.canonicalize();
  return r;
}

std::vector<uint64_t> small_primes_upto(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t k = 2; k <= n; ++k)
    if (is_prime_u64(k)) out.push_back(k);
  return out;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_smooth(Int m, uint64_t p) {
  if (m <= 0) throw std::invalid_argument("is_smooth: m must be positive");
  for (uint64_t q = 2; q <= p; q = (q == 2 ? 3 : q + 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) m /= static_cast<unsigned long>(q);
    if (m == 1) return true;
  }
  return m == 1;
}

}  // namespace coverlab
