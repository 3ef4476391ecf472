#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "zmw/parameters.hpp"

namespace zmw::test {

// Two principal and two complementary pairs used throughout.
inline std::vector<Parameters> standard_sets() {
  return {Parameters::principal({0.2, 0.5}), Parameters::principal({-0.3, 1.4}),
          Parameters::complementary(0.3, 0.6), Parameters::complementary(-0.2, -0.6)};
}

inline double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}

}  // namespace zmw::test
