#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "stepfeat/distribution.hpp"
#include "stepfeat/features.hpp"
#include "stepfeat/quantizer.hpp"
#include "stepfeat/signal.hpp"

namespace stepfeat {

// Comma-separated, header row, LF line endings. Reals use the shortest
// representation that round-trips (std::to_chars), independent of locale.

std::string format_real(double v);

/// index,source_sample,level
void write_approx_csv(std::ostream& os, const Signal& source, const StepSignal& levels);
/// bin_center,bin_value
void write_histogram_csv(std::ostream& os, const CodeHistogram& h);
/// code,count,frequency; ascending code
void write_frequency_csv(std::ostream& os, const VectorDistribution& d);
/// rank,length; longest first
void write_runs_csv(std::ostream& os, const RunReport& r);
/// position,value
void write_average_vector_csv(std::ostream& os, const AverageVector& v);

/// Reads the `level` column of a CSV with a header row, such as the output
/// of write_approx_csv. Throws parse_error on a missing column or a value
/// outside [-2, 2].
StepSignal read_levels_csv(std::istream& is);
StepSignal load_levels_csv(const std::filesystem::path& path);

/// Thresholds and per-half SNR as key=value lines.
void write_threshold_report(std::ostream& os, const Approximation& a);

}  // namespace stepfeat
