#pragma once

// The tabulated-value regression suite behind `verify --suite paper`: every
// classification constant the library is required to reproduce, one named
// check per citation.

#include <string>
#include <vector>

namespace curveatlas {

struct RegressionResult {
  std::string citation;
  bool pass;
  std::string detail;  // expected vs got when failing
};

std::vector<RegressionResult> run_paper_suite();

}  // namespace curveatlas
