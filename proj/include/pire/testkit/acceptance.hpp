#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace pire::testkit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool blocked = false;  // prerequisite data missing; not a pass
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // seconds; 0 = none
};

struct AcceptanceOptions {
  std::filesystem::path witness_path;
  // progress hook, called after each criterion
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS [1] title (0.12 s / limit 10 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace pire::testkit
