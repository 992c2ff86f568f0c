#pragma once

// The acceptance checks as a library routine, shared by the CLI and the
// acceptance binary.

#include <string>
#include <vector>

namespace hopflift {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string note;  // summary, or the first failure
  double seconds;
};

std::size_t criterion_count();
/// Runs one criterion (1-based). Exceptions are reported as failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite();

}  // namespace hopflift
