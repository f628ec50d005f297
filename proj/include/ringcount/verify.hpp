#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ringcount/enumerate.hpp"

namespace ringcount {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the acceptance suites (all of them when `only` is empty). `progress`
/// is called after each criterion.
std::vector<CriterionResult> run_acceptance(const Budget& budget, const std::set<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& progress = {});

std::string format_result(const CriterionResult& r);

}  // namespace ringcount
