#include "idealord/report.hpp"

namespace idealord {

json to_json(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  j["instance"] = r.instance;
  j["passed"] = r.passed;
  if (!r.passed) j["counterexample"] = r.counterexample;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

json to_json(const ReportBundle& b) {
  json j;
  j["passed"] = b.all_passed();
  j["checks"] = json::array();
  for (const auto& r : b.reports) j["checks"].push_back(to_json(r));
  return j;
}

}  // namespace idealord
