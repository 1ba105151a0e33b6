#pragma once

// Built-in vectors: the three-player example profile and small-group arithmetic.

#include "cakecut/refproto.hpp"

#include <string>
#include <vector>

namespace cakecut {

/// u1 = 4/5 on [0,5/6], 2 after; u2 uniform; u3 = 2 on [0,1/3], 1/2 after.
Profile example_profile();

struct SelfCheck {
  std::string name;
  bool ok;
  std::string detail;
};

std::vector<SelfCheck> run_selftest();

}  // namespace cakecut
