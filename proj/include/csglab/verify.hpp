#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace csglab {

struct SuiteOptions {
  std::uint64_t seed = 20'240'101;
  std::size_t cap = 10'000;
};

/// Outcome of one acceptance criterion.
struct CriterionResult {
  int id;
  /// Claims exercised, e.g. "Thm1,Thm6".
  std::string tags;
  std::string title;
  std::string claimed;
  std::string measured;
  std::string instances;
  bool passed;
  /// First failure, or empty.
  std::string detail;
  double seconds;
};

std::vector<std::string> suite_names();

/// Runs every criterion of the named suite ("paper"). Throws
/// ParameterViolation for an unknown suite. Criteria never throw; errors
/// surface as failed results.
std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& options = {});

/// One line per criterion: PASS/FAIL, id, tags, claim, measured value, instances.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace csglab
