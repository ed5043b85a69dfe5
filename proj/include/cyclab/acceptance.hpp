#pragma once

#include <string>
#include <vector>

namespace cyclab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the numbered acceptance criteria (1..10); an empty list runs all.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});
CriterionResult run_criterion(int id);

inline constexpr int kCriterionCount = 10;

}  // namespace cyclab
