#include <iostream>

#include "verification.hpp"

int main() {
  using namespace ftwave::verify;
  int failed = 0;
  for (int id = 1; id <= check_count(); ++id) {
    const CheckResult r = run_check(id);
    std::cout << format_line(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance failures: ")
            << (failed == 0 ? "" : std::to_string(failed)) << std::endl;
  return failed == 0 ? 0 : 1;
}
