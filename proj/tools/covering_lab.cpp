// covering-lab: verification, densities, distortion runs, lemma
// reproduction, constructions, and consolidated JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "coverlab/analytic.hpp"
#include "coverlab/congruence.hpp"
#include "coverlab/constructions.hpp"
#include "coverlab/distortion.hpp"
#include "coverlab/primes.hpp"

using namespace coverlab;
using nlohmann::json;

namespace {

struct RunConfig {
  mpfr_prec_t precision = 256;
  uint64_t sieve_limit = 10000000;
  uint64_t scan_budget = kDefaultScanBudget;
  uint64_t checkpoint_stride = 1000000;
  bool full_scale = false;
  bool strict = false;
  std::string report_path;
};

json config_json(const RunConfig& cfg) {
  json j;
  j["precision"] = static_cast<long>(cfg.precision);
  j["sieve_limit"] = cfg.sieve_limit;
  j["scan_budget"] = cfg.scan_budget;
  j["mode"] = cfg.full_scale ? "full" : "desk";
  return j;
}

void emit_report(const RunConfig& cfg, const json& body) {
  if (cfg.report_path.empty()) return;
  json j;
  j["tool"] = "covering-lab";
  j["config"] = config_json(cfg);
  j["result"] = body;
  std::ofstream out(cfg.report_path);
  if (!out) throw std::runtime_error("cannot write report to " + cfg.report_path);
  out << j.dump(2) << "\n";
}

json report_to_json(const LemmaReport& rep) { return json::parse(rep.to_json_string()); }

int exit_for(const std::vector<LemmaReport>& reps, const RunConfig&) {
  for (const auto& r : reps)
    if (r.verdict() != Verdict::Pass) return 1;
  return 0;
}

// ---- full-scale streaming runs with checkpointing ------------------------

struct StreamSums {
  uint64_t index = 0;  // primes folded so far
  uint64_t prime = 0;
  RReal recip, logp, m0log, m1log, mert;  // running enclosures

  explicit StreamSums(mpfr_prec_t prec)
      : recip(prec), logp(prec), m0log(prec), m1log(prec), mert(prec) {
    mert = RReal::from_int(1L, prec);  // prod (1+1/(p-1)) for M1
  }
};

void write_checkpoint(const std::string& path, const StreamSums& s) {
  std::ofstream out(path, std::ios::app);
  out << s.index << " " << s.prime << " " << s.recip.lower_string(40) << " "
      << s.recip.upper_string(40) << " " << s.logp.lower_string(40) << " "
      << s.logp.upper_string(40) << " " << s.m0log.lower_string(40) << " "
      << s.m0log.upper_string(40) << " " << s.m1log.lower_string(40) << " "
      << s.m1log.upper_string(40) << " " << s.mert.lower_string(40) << " "
      << s.mert.upper_string(40) << "\n";
}

bool load_checkpoint(const std::string& path, mpfr_prec_t prec, StreamSums& s) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  if (last.empty()) return false;
  std::istringstream ss(last);
  std::string f[10];
  ss >> s.index >> s.prime;
  for (auto& x : f) ss >> x;
  if (!ss) throw std::runtime_error("malformed checkpoint line in " + path);
  s.recip = RReal::from_endpoint_strings(f[0], f[1], prec);
  s.logp = RReal::from_endpoint_strings(f[2], f[3], prec);
  s.m0log = RReal::from_endpoint_strings(f[4], f[5], prec);
  s.m1log = RReal::from_endpoint_strings(f[6], f[7], prec);
  s.mert = RReal::from_endpoint_strings(f[8], f[9], prec);
  return true;
}

json full_scale_run(const RunConfig& cfg, const std::string& checkpoint) {
  const mpfr_prec_t prec = cfg.precision;
  StreamSums s(prec);
  if (!checkpoint.empty() && load_checkpoint(checkpoint, prec, s))
    std::cerr << "resuming after prime index " << s.index << "\n";
  RReal one = RReal::from_int(1L, prec);
  uint64_t from = s.prime == 0 ? 2 : s.prime + 1;
  prime_stream(from, cfg.sieve_limit, s.index + 1, [&](uint64_t idx, uint64_t p) {
    RReal pr = RReal::from_int(static_cast<long>(p), prec);
    s.recip = s.recip + pr.inv();
    s.logp = s.logp + pr.log() / pr;
    s.m0log = s.m0log + RReal::from_rat(euler_factor(p, Rat(0)), prec).log();
    // product over i >= 3 of (1 - M1(p_i)); M1 uses the Mertens product so far
    if (idx >= 3) {
      RReal m1i = s.mert / (pr - one);
      s.m1log = s.m1log + (one - m1i).log();
    }
    s.mert = s.mert * (one + (pr - one).inv());
    s.index = idx;
    s.prime = p;
    if (!checkpoint.empty() && idx % cfg.checkpoint_stride == 0) write_checkpoint(checkpoint, s);
  });
  if (!checkpoint.empty()) write_checkpoint(checkpoint, s);
  json j;
  j["primes"] = s.index;
  j["last_prime"] = s.prime;
  j["sum_1_over_p"] = {s.recip.lower_string(30), s.recip.upper_string(30)};
  j["sum_logp_over_p"] = {s.logp.lower_string(30), s.logp.upper_string(30)};
  j["m0_product_log"] = {s.m0log.lower_string(30), s.m0log.upper_string(30)};
  j["m1_product_log"] = {s.m1log.lower_string(30), s.m1log.upper_string(30)};
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering systems, the distortion method, and rigorous constant reproduction"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("COVERING_LAB_PRECISION")) {
    long v = std::atol(env);
    if (v >= 64) cfg.precision = v;
  }
  app.add_option("--precision", cfg.precision, "interval precision in bits (>= 64)")
      ->check(CLI::Range(64, 1 << 20));
  app.add_option("--sieve-limit", cfg.sieve_limit, "sieve upper bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--scan-budget", cfg.scan_budget, "largest lcm an exact scan may visit")
      ->check(CLI::PositiveNumber);
  app.add_option("--checkpoint-stride", cfg.checkpoint_stride, "primes between checkpoints")
      ->check(CLI::PositiveNumber);
  app.add_flag("--full", cfg.full_scale, "run the full-scale streaming computations");
  app.add_flag("--strict", cfg.strict, "map any failed check to exit code 1");
  app.add_option("--report", cfg.report_path, "write a JSON report here");

  std::string input_path, output_path;
  uint64_t smooth_bound = 0;

  auto* verify = app.add_subcommand("verify", "covering / distinct / exact / sum of a system");
  verify->add_option("file", input_path, "covering-system JSON")->required();

  auto* density = app.add_subcommand("density", "exact covered density");
  density->add_option("file", input_path, "covering-system JSON")->required();
  density->add_option("--smooth-bound", smooth_bound, "restrict to classes with P-smooth modulus");

  auto* deltacmd = app.add_subcommand("delta", "density left uncovered by 3-smooth-moduli classes");
  deltacmd->add_option("file", input_path, "covering-system JSON")->required();

  std::string profile_text, delta_text;
  auto* distort = app.add_subcommand("distort", "run the distortion method over a profile");
  distort->add_option("file", input_path, "covering-system JSON")->required();
  distort->add_option("--profile", profile_text, "prime powers, e.g. 2^2,3,5")->required();
  distort->add_option("--delta", delta_text, "delta schedule, e.g. 0,0,1/4");

  std::string only = "all", delta_rat = "1/12", checkpoint_path;
  auto* lemmas = app.add_subcommand("lemmas", "reproduce the named lemma computations");
  lemmas->add_option("--only", only,
                     "tail | m1 | difference | smooth | loglog | constants | sigma | primes");
  lemmas->add_option("--delta", delta_rat, "Delta as p/q for difference/smooth");
  lemmas->add_option("--checkpoint", checkpoint_path, "checkpoint file for --full runs");

  unsigned m0 = 2;
  std::string eps_text = "1/4";
  unsigned greedy_t = 2;
  size_t greedy_steps = 10;
  bool greedy_mode = false;
  auto* construct = app.add_subcommand("construct", "build verified covering systems");
  construct->add_option("--min-modulus", m0, "2, 3 or 4");
  construct->add_option("--epsilon", eps_text, "excess budget as p/q");
  construct->add_flag("--greedy", greedy_mode, "power-of-two greedy prefix instead");
  construct->add_option("--t", greedy_t, "greedy: moduli start at 2^(t+1)");
  construct->add_option("--steps", greedy_steps, "greedy: number of congruences");
  construct->add_option("-o,--output", output_path, "write the system here");

  auto* reportcmd = app.add_subcommand("report", "run the full desk-scale suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      CoveringSystem sys = CoveringSystem::load(input_path);
      ScanResult r = scan(sys, cfg.scan_budget);
      Rat sum = reciprocal_sum(sys);
      bool covering = r.covering();
      std::cout << "covering: " << (covering ? "true" : "false")
                << ", distinct: " << (is_distinct(sys) ? "true" : "false")
                << ", exact: " << (r.exact() ? "true" : "false")
                << ", sum: " << rat_to_string(sum) << "\n";
      json j;
      j["covering"] = covering;
      j["distinct"] = is_distinct(sys);
      j["exact"] = r.exact();
      j["reciprocal_sum"] = rat_to_string(sum);
      j["min_modulus"] = min_modulus(sys).get_str();
      j["lcm"] = r.lcm.get_str();
      emit_report(cfg, j);
      return (cfg.strict && !covering) ? 1 : 0;
    }

    if (*density) {
      CoveringSystem sys = CoveringSystem::load(input_path);
      std::vector<Congruence> classes;
      for (const auto& c : sys.classes())
        if (smooth_bound == 0 || is_smooth(c.modulus, smooth_bound)) classes.push_back(c);
      Rat d = covered_density(classes, cfg.scan_budget);
      std::cout << "density: " << rat_to_string(d) << "\n";
      json j;
      j["density"] = rat_to_string(d);
      j["classes_used"] = classes.size();
      emit_report(cfg, j);
      return 0;
    }

    if (*deltacmd) {
      CoveringSystem sys = CoveringSystem::load(input_path);
      Rat d = delta(sys, cfg.scan_budget);
      std::cout << "delta: " << rat_to_string(d) << "\n";
      json j;
      j["delta"] = rat_to_string(d);
      emit_report(cfg, j);
      return 0;
    }

    if (*distort) {
      CoveringSystem sys = CoveringSystem::load(input_path);
      PrimePowerProfile prof = PrimePowerProfile::parse(profile_text, cfg.scan_budget);
      DeltaSchedule sched =
          delta_text.empty() ? DeltaSchedule() : DeltaSchedule::parse(delta_text);
      DistortionState state = DistortionState::initial(prof);
      json levels = json::array();
      for (size_t i = 1; i <= prof.levels(); ++i) {
        BadSet b = bad_set(sys, prof, i);
        state = step(state, b, sched.at(i));
        json lj;
        lj["level"] = i;
        lj["prime"] = prof.prime(i);
        lj["delta"] = rat_to_string(sched.at(i));
        lj["mass"] = rat_to_string(state.mass());
        lj["bad_measure"] = rat_to_string(measure(state, b));
        levels.push_back(lj);
        std::cout << "level " << i << ": P_i(B_i) = " << lj["bad_measure"].get<std::string>()
                  << ", mass = " << lj["mass"].get<std::string>() << "\n";
      }
      LemmaReport chain = moment_bound_chain_check(sys, prof, sched);
      std::cout << "chain: " << verdict_name(chain.verdict()) << "\n";
      json j;
      j["levels"] = levels;
      j["chain"] = report_to_json(chain);
      emit_report(cfg, j);
      return chain.verdict() == Verdict::Pass ? 0 : 1;
    }

    if (*lemmas) {
      if (cfg.full_scale) {
        json j = full_scale_run(cfg, checkpoint_path);
        std::cout << j.dump(2) << "\n";
        emit_report(cfg, j);
        return 0;
      }
      std::vector<LemmaReport> reps;
      const Rat Delta = rat_from_string(delta_rat);
      std::optional<PrimeTable> table;
      auto need_table = [&]() -> const PrimeTable& {
        if (!table) table = PrimeTable::sieve(cfg.sieve_limit);
        return *table;
      };
      if (only == "loglog" || only == "all") {
        size_t n_max = std::min<size_t>(100000, need_table().count());
        reps.push_back(loglog_lemma_check(need_table(), n_max));
      }
      if (only == "tail" || only == "constants" || only == "all")
        reps.push_back(tail_estimate(Int(1000000000L), cfg.precision).report);
      if (only == "m1" || only == "all")
        reps.push_back(m1_lower_bound(Int(1000000000L), need_table(), cfg.precision).report);
      if (only == "difference" || only == "all")
        reps.push_back(difference_bound(Delta, cfg.precision));
      if (only == "smooth" || only == "all")
        reps.push_back(smooth_tail_bound(Delta, cfg.precision));
      if (only == "sigma" || only == "all")
        reps.push_back(sigma_bounds(std::min<size_t>(10000, need_table().count() / 2),
                                    need_table(), cfg.precision));
      if (only == "primes" || only == "all")
        reps.push_back(validate_prime_inequalities(need_table(), {100, 1000, 10000}));
      if (reps.empty()) {
        std::cerr << "unknown --only selector: " << only << "\n";
        return 2;
      }
      json arr = json::array();
      for (const auto& r : reps) {
        std::cout << r.name << ": " << verdict_name(r.verdict()) << "\n";
        arr.push_back(report_to_json(r));
      }
      emit_report(cfg, arr);
      return exit_for(reps, cfg);
    }

    if (*construct) {
      CoveringSystem sys;
      if (greedy_mode) {
        sys = greedy_power2_covering(greedy_t, greedy_steps, default_integer_ordering);
        std::cout << "greedy prefix: " << sys.size()
                  << " classes, sum = " << rat_to_string(reciprocal_sum(sys)) << "\n";
      } else {
        sys = build_small_min_modulus_covering(m0, rat_from_string(eps_text), cfg.scan_budget);
        std::cout << "covering with min modulus " << m0 << ": " << sys.size()
                  << " classes, sum = " << rat_to_string(reciprocal_sum(sys)) << "\n";
      }
      if (!output_path.empty()) sys.save(output_path);
      json j;
      j["classes"] = sys.size();
      j["reciprocal_sum"] = rat_to_string(reciprocal_sum(sys));
      emit_report(cfg, j);
      return 0;
    }

    if (*reportcmd) {
      std::vector<LemmaReport> reps;
      PrimeTable table = PrimeTable::sieve(cfg.sieve_limit);
      reps.push_back(loglog_lemma_check(table, std::min<size_t>(100000, table.count())));
      reps.push_back(tail_estimate(Int(1000000000L), cfg.precision).report);
      reps.push_back(m1_lower_bound(Int(1000000000L), table, cfg.precision).report);
      reps.push_back(difference_bound(Rat(1, 12), cfg.precision));
      reps.push_back(difference_bound(Rat(1, 100), cfg.precision));
      reps.push_back(smooth_tail_bound(Rat(1, 12), cfg.precision));
      reps.push_back(smooth_tail_bound(Rat(1, 100), cfg.precision));
      reps.push_back(sigma_bounds(std::min<size_t>(10000, table.count() / 2), table,
                                  cfg.precision));
      reps.push_back(validate_prime_inequalities(table, {100, 1000, 10000}));
      json arr = json::array();
      for (const auto& r : reps) {
        std::cout << r.name << ": " << verdict_name(r.verdict()) << "\n";
        arr.push_back(report_to_json(r));
      }
      emit_report(cfg, arr);
      return exit_for(reps, cfg);
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
