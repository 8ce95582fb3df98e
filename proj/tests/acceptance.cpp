// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Pass --deep to extend the exhaustive checks to P_5.

#include <cstring>
#include <iostream>

#include "pdsort/verify.hpp"

int main(int argc, char** argv) {
  pdsort::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--deep") == 0) {
      options.deep = true;
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      options.jobs = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--deep] [--jobs K]\n";
      return 2;
    }
  }
  int failed = 0;
  for (const auto& result : pdsort::run_acceptance(options)) {
    std::cout << pdsort::format_result(result) << std::endl;
    if (!result.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
