#include "coverlab/report.hpp"

#include <json.hpp>

namespace coverlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::TooWide: return "enclosure-too-wide";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

void LemmaReport::add(std::string label, Verdict v, std::string value, std::string claim) {
  checks.push_back({std::move(label), v, std::move(value), std::move(claim)});
}

void LemmaReport::add_bool(std::string label, bool ok, std::string value, std::string claim) {
  add(std::move(label), ok ? Verdict::Pass : Verdict::Fail, std::move(value), std::move(claim));
}

// pass < claim.lower means verified; enclosure straddling the claim is
// reported as too-wide rather than fail.
void LemmaReport::add_enclosure_less(std::string label, const RReal& value, const Rat& bound,
                                     std::string claim) {
  Verdict v = Verdict::TooWide;
  if (value.strictly_less(bound)) v = Verdict::Pass;
  else if (value.strictly_greater(bound)) v = Verdict::Fail;
  add(std::move(label), v, value.to_string(), std::move(claim));
}

void LemmaReport::add_enclosure_greater(std::string label, const RReal& value, const Rat& bound,
                                        std::string claim) {
  Verdict v = Verdict::TooWide;
  if (value.strictly_greater(bound)) v = Verdict::Pass;
  else if (value.strictly_less(bound)) v = Verdict::Fail;
  add(std::move(label), v, value.to_string(), std::move(claim));
}

Verdict LemmaReport::verdict() const {
  bool wide = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::TooWide) wide = true;
  }
  return wide ? Verdict::TooWide : Verdict::Pass;
}

std::string LemmaReport::to_json_string(int indent) const {
  nlohmann::json j;
  j["name"] = name;
  j["claim"] = claim;
  j["inputs"] = inputs;
  if (!notes.empty()) j["notes"] = notes;
  j["verdict"] = verdict_name(verdict());
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj;
    cj["label"] = c.label;
    cj["verdict"] = verdict_name(c.verdict);
    if (!c.value.empty()) cj["value"] = c.value;
    if (!c.claim.empty()) cj["claim"] = c.claim;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j.dump(indent);
}

}  // namespace coverlab
