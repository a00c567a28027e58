#pragma once

// Reproducibility runner: every headline result checked at desk scale, each
// with a wall-clock budget.

#include <functional>
#include <string>
#include <vector>

namespace skelsum {

enum class Scale { smoke, full };

struct CheckResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;   // mathematical outcome and time budget both met
  double seconds = 0;    // total wall time
  double slowest = 0;    // slowest single run
  std::string budget;    // e.g. "each < 10 s"
};

/// Runs criteria in order, reporting each result as it completes.
std::vector<CheckResult> run_acceptance_checks(Scale scale,
                                          const std::function<void(const CheckResult&)>& on_result = {});

std::string csv_header();
std::string csv_row(const CheckResult& r);

}  // namespace skelsum
