#pragma once

#include <cstddef>
#include <vector>

namespace cauchy_angles {

/// Monte Carlo output of a map that can hit a pole. `values` holds the
/// requested number of finite draws; `pole_discards` counts rejected ones.
struct SampleSet {
  std::vector<double> values;
  std::size_t pole_discards = 0;
};

}  // namespace cauchy_angles
