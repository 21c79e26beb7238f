#include "coverlab/congruence.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>

namespace coverlab {

Congruence::Congruence(Int a, Int m) : residue(std::move(a)), modulus(std::move(m)) {
  if (modulus < 1) throw std::invalid_argument("Congruence: modulus must be >= 1");
  mpz_mod(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
}

bool Congruence::contains(const Int& n) const {
  Int r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  return r == residue;
}

CoveringSystem CoveringSystem::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("covering-system JSON must be an array");
  std::vector<Congruence> cls;
  for (const auto& e : j) {
    if (!e.contains("a") || !e.contains("m"))
      throw std::invalid_argument("covering-system entries need fields \"a\" and \"m\"");
    Int a(e["a"].is_string() ? e["a"].get<std::string>() : std::to_string(e["a"].get<long long>()));
    Int m(e["m"].is_string() ? e["m"].get<std::string>() : std::to_string(e["m"].get<long long>()));
    cls.emplace_back(a, m);
  }
  return CoveringSystem(std::move(cls));
}

CoveringSystem CoveringSystem::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_string(text);
}

std::string CoveringSystem::to_json_string(int indent) const {
  auto arr = nlohmann::json::array();
  for (const auto& c : classes_) {
    nlohmann::json e;
    if (c.residue.fits_slong_p() && c.modulus.fits_slong_p()) {
      e["a"] = c.residue.get_si();
      e["m"] = c.modulus.get_si();
    } else {
      e["a"] = c.residue.get_str();
      e["m"] = c.modulus.get_str();
    }
    arr.push_back(e);
  }
  return arr.dump(indent);
}

void CoveringSystem::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json_string() << "\n";
}

Int lcm_moduli(const CoveringSystem& sys) {
  if (sys.empty()) throw std::invalid_argument("lcm_moduli: empty system");
  Int l(1);
  for (const auto& c : sys.classes())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.modulus.get_mpz_t());
  return l;
}

namespace {

uint64_t checked_scan_length(const Int& l, uint64_t budget) {
  if (!l.fits_ulong_p() || l.get_ui() > budget)
    throw std::runtime_error("scan budget exceeded: lcm of moduli is " + l.get_str());
  return l.get_ui();
}

}  // namespace

ScanResult scan(const CoveringSystem& sys, uint64_t budget) {
  Int l = lcm_moduli(sys);
  uint64_t L = checked_scan_length(l, budget);
  std::vector<bool> once(L, false), twice(L, false);
  for (const auto& c : sys.classes()) {
    uint64_t m = c.modulus.get_ui();
    for (uint64_t x = c.residue.get_ui(); x < L; x += m) {
      if (once[x]) twice[x] = true;
      else once[x] = true;
    }
  }
  uint64_t covered = 0, multi = 0;
  for (uint64_t x = 0; x < L; ++x) {
    covered += once[x];
    multi += twice[x];
  }
  return {l, covered, multi};
}

bool is_covering(const CoveringSystem& sys, uint64_t budget) {
  return scan(sys, budget).covering();
}

bool is_distinct(const CoveringSystem& sys) {
  std::set<Int> seen;
  for (const auto& c : sys.classes())
    if (!seen.insert(c.modulus).second) return false;
  return true;
}

bool is_exact(const CoveringSystem& sys, uint64_t budget) { return scan(sys, budget).exact(); }

Int min_modulus(const CoveringSystem& sys) {
  if (sys.empty()) throw std::invalid_argument("min_modulus: empty system");
  Int m = sys.classes().front().modulus;
  for (const auto& c : sys.classes()) m = std::min(m, c.modulus);
  return m;
}

Rat reciprocal_sum(const CoveringSystem& sys) {
  Rat s(0);
  for (const auto& c : sys.classes()) s += Rat(Int(1), c.modulus);
  s.canonicalize();
  return s;
}

Rat covered_density(const std::vector<Congruence>& classes, uint64_t budget) {
  if (classes.empty()) return Rat(0);
  ScanResult r = scan(CoveringSystem(classes), budget);
  Rat d(Int(static_cast<unsigned long>(r.covered)), r.lcm);
  d.canonicalize();
  return d;
}

Rat delta(const CoveringSystem& sys, uint64_t budget) {
  std::vector<Congruence> smooth3;
  for (const auto& c : sys.classes())
    if (is_smooth(c.modulus, 3)) smooth3.push_back(c);
  return Rat(1) - covered_density(smooth3, budget);
}

Rat smooth_reciprocal_mass(uint64_t P, const Int& m0) {
  if (!is_prime_u64(P)) throw std::invalid_argument("smooth_reciprocal_mass: P must be prime");
  if (m0 < 1) throw std::invalid_argument("smooth_reciprocal_mass: m0 must be >= 1");
  Rat closed(1);
  for (uint64_t p : small_primes_upto(P))
    closed *= Rat(static_cast<unsigned long>(p), static_cast<unsigned long>(p - 1));
  Rat head(0);
  for (const Int& m : smooth_numbers_upto(m0 - 1, P)) head += Rat(Int(1), m);
  Rat out = closed - head;
  out.canonicalize();
  return out;
}

std::vector<Int> smooth_numbers_upto(const Int& limit, uint64_t P) {
  std::vector<Int> out;
  if (limit < 1) return out;
  auto primes = small_primes_upto(P);
  out.push_back(Int(1));
  // DFS over exponent vectors
  std::function<void(size_t, Int)> rec = [&](size_t idx, Int value) {
    for (size_t i = idx; i < primes.size(); ++i) {
      Int next = value * static_cast<unsigned long>(primes[i]);
      while (next <= limit) {
        out.push_back(next);
        rec(i + 1, next);
        next *= static_cast<unsigned long>(primes[i]);
      }
    }
  };
  rec(0, Int(1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coverlab
