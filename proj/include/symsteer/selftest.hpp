#pragma once

#include <string>
#include <vector>

namespace symsteer {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Golden values for the named states: roots, symmetrisation, marginals,
// concurrence, tangles, canonical forms, volumes and the 3-qubit conversion.
std::vector<SelftestCheck> run_selftest();

}  // namespace symsteer
