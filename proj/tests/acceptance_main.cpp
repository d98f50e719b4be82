// Acceptance suite: one PASS/FAIL/BLOCKED line per criterion, nonzero exit if
// any criterion does not pass.

#include <iostream>

#include "pire/testkit/acceptance.hpp"

int main(int argc, char** argv) {
  pire::testkit::AcceptanceOptions options;
  options.witness_path = argc > 1 ? argv[1] : "data/k12_pire.json";
  options.on_result = [](const pire::testkit::CriterionResult& r) {
    std::cout << pire::testkit::format_result(r) << std::endl;
  };
  const auto results = pire::testkit::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
