// One line per acceptance criterion; exit status 0 iff all pass.
#include <cstring>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  hopfrep::tools::AcceptanceOptions opt;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--corrupt-fixture") == 0) opt.corrupt_catalog = true;
  bool all = true;
  for (const auto& r : hopfrep::tools::run_acceptance(opt)) {
    std::cout << hopfrep::tools::format_check(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
