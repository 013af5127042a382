#include "stepfeat/signal.hpp"

#include <algorithm>
#include <cmath>

#include "stepfeat/error.hpp"

namespace stepfeat {

Signal::Signal(std::vector<double> samples, std::uint32_t sample_rate_hz)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz) {
  if (samples_.empty()) fail(Errc::invalid_argument, "signal has no samples");
  if (sample_rate_hz_ == 0) fail(Errc::invalid_argument, "sample rate must be positive");
  if (!std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); }))
    fail(Errc::invalid_argument, "signal contains a non-finite sample");
}

}  // namespace stepfeat
