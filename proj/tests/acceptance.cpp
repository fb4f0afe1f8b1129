// Runs every end-to-end criterion at full size and prints one line each.
// Usage: gnk_acceptance [seed]

#include <cstdlib>   // for strtoull
#include <iostream>  // for cout

#include "gnk/selftest.hpp"

int main(int argc, char** argv) {
  gnk::SelftestOptions opts;
  if (argc > 1) {
    opts.seed = std::strtoull(argv[1], nullptr, 10);
  }
  int failed = 0;
  for (int id = 1; id <= gnk::kNumCriteria; ++id) {
    auto const r = gnk::run_criterion(id, opts);
    std::cout << gnk::format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
