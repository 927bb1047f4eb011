#pragma once

#include <string>
#include <vector>

#include "pairwalk/transfer.hpp"

namespace pairwalk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The built-in verification suite: twelve numbered criteria covering the
/// cycle and complete-graph classifications, the line-graph and product
/// correspondences, quotient lifts, fractional revival, the distance-regular
/// transfer rules, and the exhaustive small-graph property checks.
/// `ids` restricts the run to the listed criteria (empty = all twelve).
std::vector<CriterionResult> run_acceptance(const Tolerances& tol = Tolerances::from_env(),
                                            const std::vector<int>& ids = {});

/// Render one "PASS"/"FAIL" line per criterion; returns the failure count.
int print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace pairwalk
