#pragma once

#include <string>
#include <vector>

namespace ftwave::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Number of acceptance checks.
int check_count();

/// Runs one check by id (1-based).
CheckResult run_check(int id);

/// "all" or a comma separated list of ids, e.g. "1,2,9".
std::vector<int> parse_selector(const std::string& selector);

std::vector<CheckResult> run_checks(const std::vector<int>& ids);

/// One line per check: "[PASS] 01 name: detail".
std::string format_line(const CheckResult& r);

}  // namespace ftwave::verify
