#ifndef IDEALORD_REPORT_HPP
#define IDEALORD_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace idealord {

using json = nlohmann::ordered_json;

// Structured result of one verification pass. A counterexample is attached
// exactly when the check failed; witnesses are optional extra payload.
struct CheckReport {
  std::string check;
  std::string instance;
  bool passed = true;
  json counterexample;  // null unless passed == false
  json witness;         // may be null
  double elapsed_ms = 0.0;

  void fail(json ce) {
    passed = false;
    if (counterexample.is_null()) counterexample = std::move(ce);
  }
};

json to_json(const CheckReport& r);

// Flat collection of reports with an overall verdict.
struct ReportBundle {
  std::vector<CheckReport> reports;

  bool all_passed() const {
    for (const auto& r : reports)
      if (!r.passed) return false;
    return true;
  }
  void add(CheckReport r) { reports.push_back(std::move(r)); }
};

json to_json(const ReportBundle& b);

}  // namespace idealord

#endif
