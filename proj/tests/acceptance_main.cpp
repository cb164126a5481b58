#include <cstdlib>
#include <iostream>

#include "csglab/verify.hpp"

int main() {
  csglab::SuiteOptions options;
  if (const char* seed = std::getenv("CSGLAB_SEED")) options.seed = std::strtoull(seed, nullptr, 10);
  const auto results = csglab::run_suite("paper", options);
  csglab::print_results(std::cout, results);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
