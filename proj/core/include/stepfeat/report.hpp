#pragma once

#include <string>

#include "stepfeat/pipeline.hpp"

namespace stepfeat {

/// One row per bootstrap iteration: correct counts next to the held-out
/// totals of each class.
std::string format_report_table(const BootstrapReport& report,
                                const std::string& label1 = "class1",
                                const std::string& label2 = "class2");

/// {"config": {...}, "iterations": [{"correct1", "correct2", "total1",
/// "total2"}, ...]}, pretty-printed with two-space indent and a trailing LF.
std::string experiment_json(const ExperimentResult& result, const PipelineConfig& cfg);

}  // namespace stepfeat
