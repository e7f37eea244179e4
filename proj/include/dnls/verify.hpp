#pragma once

#include <string>
#include <vector>

namespace dnls::verify {

struct Check {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  [[nodiscard]] bool pass() const;
  [[nodiscard]] double worst_error() const;
};

/// Suites: quad, ode, mass, momentum, gauge.
SuiteResult run_suite(const std::string& name, unsigned long long seed = 20240601);

std::vector<std::string> suite_names();

}  // namespace dnls::verify
