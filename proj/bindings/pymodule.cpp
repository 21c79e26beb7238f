// Python bindings for the main operations. Exact rationals cross the
// boundary as "p/q" strings; enclosures as (lower, upper) decimal pairs.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coverlab/analytic.hpp"
#include "coverlab/congruence.hpp"
#include "coverlab/constructions.hpp"
#include "coverlab/distortion.hpp"
#include "coverlab/primes.hpp"

namespace py = pybind11;
using namespace coverlab;

namespace {

CoveringSystem system_from_pairs(const std::vector<std::pair<std::string, std::string>>& classes) {
  std::vector<Congruence> cls;
  cls.reserve(classes.size());
  for (const auto& [a, m] : classes) cls.emplace_back(Int(a), Int(m));
  return CoveringSystem(std::move(cls));
}

py::dict report_to_dict(const LemmaReport& rep) {
  py::dict d;
  d["name"] = rep.name;
  d["claim"] = rep.claim;
  d["inputs"] = rep.inputs;
  d["verdict"] = verdict_name(rep.verdict());
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict cd;
    cd["label"] = c.label;
    cd["verdict"] = verdict_name(c.verdict);
    cd["value"] = c.value;
    cd["claim"] = c.claim;
    checks.append(cd);
  }
  d["checks"] = checks;
  return d;
}

py::tuple enclosure(const RReal& v, size_t digits = 30) {
  return py::make_tuple(v.lower_string(digits), v.upper_string(digits));
}

}  // namespace

PYBIND11_MODULE(_covering_lab, m) {
  m.doc() = "covering systems, the distortion method, and rigorous constant reproduction";

  m.def("verify", [](const std::vector<std::pair<std::string, std::string>>& classes,
                     uint64_t budget) {
    CoveringSystem sys = system_from_pairs(classes);
    ScanResult r = scan(sys, budget);
    py::dict d;
    d["covering"] = r.covering();
    d["distinct"] = is_distinct(sys);
    d["exact"] = r.exact();
    d["reciprocal_sum"] = rat_to_string(reciprocal_sum(sys));
    d["min_modulus"] = min_modulus(sys).get_str();
    return d;
  }, py::arg("classes"), py::arg("budget") = kDefaultScanBudget);

  m.def("covered_density", [](const std::vector<std::pair<std::string, std::string>>& classes) {
    return rat_to_string(covered_density(system_from_pairs(classes).classes()));
  });

  m.def("delta", [](const std::vector<std::pair<std::string, std::string>>& classes) {
    return rat_to_string(delta(system_from_pairs(classes)));
  });

  m.def("smooth_reciprocal_mass", [](uint64_t P, const std::string& m0) {
    return rat_to_string(smooth_reciprocal_mass(P, Int(m0)));
  });

  m.def("chi", [](const std::string& mval) { return chi(Int(mval)).get_str(); });

  m.def("euler_factor", [](uint64_t p, const std::string& delta_i) {
    return rat_to_string(euler_factor(p, rat_from_string(delta_i)));
  });

  m.def("distort", [](const std::vector<std::pair<std::string, std::string>>& classes,
                      const std::string& profile, const std::string& deltas) {
    CoveringSystem sys = system_from_pairs(classes);
    PrimePowerProfile prof = PrimePowerProfile::parse(profile);
    DeltaSchedule sched = deltas.empty() ? DeltaSchedule() : DeltaSchedule::parse(deltas);
    DistortionState st = DistortionState::initial(prof);
    py::list levels;
    for (size_t i = 1; i <= prof.levels(); ++i) {
      BadSet b = bad_set(sys, prof, i);
      st = step(st, b, sched.at(i));
      py::dict lv;
      lv["level"] = i;
      lv["mass"] = rat_to_string(st.mass());
      lv["bad_measure"] = rat_to_string(measure(st, b));
      levels.append(lv);
    }
    py::dict d;
    d["levels"] = levels;
    d["chain"] = report_to_dict(moment_bound_chain_check(sys, prof, sched));
    return d;
  }, py::arg("classes"), py::arg("profile"), py::arg("deltas") = "");

  m.def("moment_bound_chain_check",
        [](const std::vector<std::pair<std::string, std::string>>& classes,
           const std::string& profile, const std::string& deltas) {
          return report_to_dict(moment_bound_chain_check(system_from_pairs(classes),
                                                         PrimePowerProfile::parse(profile),
                                                         DeltaSchedule::parse(deltas)));
        });

  m.def("sieve_primes", [](uint64_t limit) {
    PrimeTable t = PrimeTable::sieve(limit);
    return t.primes();
  });

  m.def("loglog_lemma_check", [](uint64_t sieve_limit, size_t n_max) {
    PrimeTable t = PrimeTable::sieve(sieve_limit);
    return report_to_dict(loglog_lemma_check(t, n_max));
  });

  m.def("nth_prime_bounds", [](const std::string& n) {
    auto b = nth_prime_bounds(Int(n));
    return py::make_tuple(enclosure(b.tau1), enclosure(b.tau2));
  });

  m.def("delta_prime_constants", [] {
    auto k = delta_prime_constants();
    py::dict d;
    d["delta_prime"] = rat_to_string(k.delta_prime);
    d["eta"] = rat_to_string(k.eta);
    d["eta_prime"] = rat_to_string(k.eta_prime);
    return d;
  });

  m.def("m1_exact", [](size_t i, uint64_t sieve_limit) {
    PrimeTable t = PrimeTable::sieve(sieve_limit);
    return rat_to_string(m1_exact(i, t));
  }, py::arg("i"), py::arg("sieve_limit") = 1000);

  m.def("tail_estimate", [](const std::string& n, long prec) {
    auto res = tail_estimate(Int(n), prec);
    py::dict d = report_to_dict(res.report);
    d["value"] = enclosure(res.value);
    return d;
  }, py::arg("n"), py::arg("prec") = 256);

  m.def("difference_bound", [](const std::string& delta_value, long prec) {
    return report_to_dict(difference_bound(rat_from_string(delta_value), prec));
  }, py::arg("delta_value"), py::arg("prec") = 256);

  m.def("smooth_tail_bound", [](const std::string& delta_value, long prec) {
    return report_to_dict(smooth_tail_bound(rat_from_string(delta_value), prec));
  }, py::arg("delta_value"), py::arg("prec") = 256);

  m.def("smooth_count_exact", [](const std::string& limit, uint64_t P) {
    return smooth_count_exact(Int(limit), P).get_str();
  });

  m.def("build_small_min_modulus_covering", [](unsigned m0, const std::string& eps) {
    CoveringSystem sys = build_small_min_modulus_covering(m0, rat_from_string(eps));
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : sys.classes())
      out.emplace_back(c.residue.get_str(), c.modulus.get_str());
    return out;
  });

  m.def("greedy_power2_covering", [](unsigned t, size_t steps) {
    CoveringSystem sys = greedy_power2_covering(t, steps, default_integer_ordering);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : sys.classes())
      out.emplace_back(c.residue.get_str(), c.modulus.get_str());
    return out;
  });

  m.def("inclusion_exclusion_sum", [](const std::vector<std::string>& reduced) {
    std::vector<Int> d;
    d.reserve(reduced.size());
    for (const auto& s : reduced) d.emplace_back(s);
    return rat_to_string(inclusion_exclusion_sum(d));
  });
}
