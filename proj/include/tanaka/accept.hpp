#pragma once

#include <string>
#include <vector>

namespace tanaka {

struct CriterionResult {
  int id;
  std::string label;
  bool pass;
  std::string detail;  // non-empty on failure or for notes
  double seconds;
};

/// Runs the full acceptance suite against the shipped fixtures.
/// jobs caps the concurrency of independent sub-jobs (0 = hardware).
std::vector<CriterionResult> run_acceptance(const std::string& fixtures_dir, unsigned jobs = 0);

}  // namespace tanaka
