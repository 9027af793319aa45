#pragma once

#include <string>
#include <vector>

namespace hcfam {

// One verified identity: named, pass/fail, with failure detail (typically the
// nonzero remainder pretty-printed).
struct CheckResult {
  std::string identity;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& r : results)
      if (!r.pass) return &r;
    return nullptr;
  }
  void add(std::string identity, bool pass, std::string detail = "") {
    results.push_back({std::move(identity), pass, std::move(detail)});
  }
  void merge(const CheckReport& o) {
    results.insert(results.end(), o.results.begin(), o.results.end());
  }
};

}  // namespace hcfam
