#pragma once

#include <string>
#include <vector>

namespace hopfrep::tools {

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string expected;
  std::string computed;
  double seconds = 0;
};

struct AcceptanceOptions {
  // test fixture: scale a12 of S_st(i) by 2 before the simple census
  bool corrupt_catalog = false;
};

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opt = {});

/// "[PASS] 3 eigenvalue law (0.01s): expected ..., computed ..."
std::string format_check(const CheckResult& r);

}  // namespace hopfrep::tools
