#include "stepfeat/features.hpp"

#include "stepfeat/error.hpp"

namespace stepfeat {

AverageVector average_vector(const VectorDistribution& d) {
  AverageVector avg{d.lw(), std::vector<double>(d.lw(), 0.0)};
  bool any_positive = false;
  for (auto it = d.frequencies().upper_bound(0); it != d.frequencies().end(); ++it) {
    const auto& [code, fr] = *it;
    any_positive = true;
    const WindowVector v = decode(code, d.lw());
    for (std::size_t k = 0; k < v.lw(); ++k) avg.components[k] += fr * v[k];
  }
  if (!any_positive) fail(Errc::invalid_argument, "distribution has no positive code");
  return avg;
}

double positive_mass(const VectorDistribution& d) {
  double mass = 0.0;
  for (auto it = d.frequencies().upper_bound(0); it != d.frequencies().end(); ++it) mass += it->second;
  return mass;
}

}  // namespace stepfeat
