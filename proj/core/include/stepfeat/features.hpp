#pragma once

#include <cstddef>
#include <vector>

#include "stepfeat/distribution.hpp"

namespace stepfeat {

struct AverageVector {
  std::size_t lw;
  std::vector<double> components;
};

/// Frequency-weighted sum of decoded window vectors over codes > 0.
/// Frequencies are used as-is, so the result scales with the positive mass.
/// Throws invalid_argument when the distribution has no positive code.
AverageVector average_vector(const VectorDistribution& d);

/// sum of fr(code) over code > 0.
double positive_mass(const VectorDistribution& d);

}  // namespace stepfeat
