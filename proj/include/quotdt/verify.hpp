#pragma once

#include <string>
#include <vector>

namespace quotdt::verify {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the full cross-verification suite with its pinned parameters.
/// `suite` selects a single check by name, or "all".
std::vector<CheckResult> run_suite(const std::string& suite = "all", unsigned seed = 1);

std::vector<std::string> suite_names();

}  // namespace quotdt::verify
