#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kmoduli {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::vector<std::string> notes;
};

/// Runs the full paper regression: the closed-form beta/S identities, the
/// Zariski breakpoints, the wall constants, the threshold tables, the GIT
/// classification, the quasimap types, the base-curve MMP conservation laws,
/// the canonical-bundle-formula arithmetic, and the independent-oracle
/// cross-checks. Exact equality unless a tolerance is stated in the note.
std::vector<CriterionResult> run_paper_suite();

/// One line per criterion; returns the number of failures.
int print_suite(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace kmoduli
