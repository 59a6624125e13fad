// Runs the acceptance battery: one PASS/FAIL line per item.
#include <iostream>

#include "domgame/suite.hpp"

int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  const auto outcomes = domgame::run_suite(only, std::cout);
  int failed = 0;
  for (const auto& o : outcomes) failed += o.passed ? 0 : 1;
  std::cout << outcomes.size() - failed << "/" << outcomes.size() << " passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
