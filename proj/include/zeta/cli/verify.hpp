// Self-check suites exposed through `zeta verify`.

#pragma once

#include "zeta/numerics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace zeta::cli {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string error;  // set when the check could not be evaluated
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one of theta, functional, dual, trivial, decomposition or all.
/// Throws UsageError for unknown names. Numerical failures are reported as
/// failed checks, not exceptions.
std::vector<CheckResult> run_suite(std::string_view suite, const QuadratureConfig& cfg);

}  // namespace zeta::cli
