// Acceptance gate: runs every criterion of the paper regression and prints
// one pass/fail line each. Exits with the number of failing criteria.

#include <iostream>

#include "kmoduli/suite.hpp"

int main() {
  auto results = kmoduli::run_paper_suite();
  int failures = kmoduli::print_suite(std::cout, results);
  return failures;
}
