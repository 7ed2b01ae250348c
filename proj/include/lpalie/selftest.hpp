#pragma once

// Regression checks against the worked examples, runnable from the CLI.

#include <string>
#include <vector>

namespace lpalie {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelftestCase> run_selftest();

}  // namespace lpalie
