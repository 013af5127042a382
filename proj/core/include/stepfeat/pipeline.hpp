#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "stepfeat/bootstrap.hpp"
#include "stepfeat/features.hpp"
#include "stepfeat/mlp.hpp"
#include "stepfeat/quantizer.hpp"
#include "stepfeat/signal.hpp"

namespace stepfeat {

struct PipelineConfig {
  std::size_t lw = 7;
  SearchConfig search{};
  std::uint64_t seed = 0;
  std::size_t num_tests = 5;
  TrainConfig train{};
};

/// Description of a synthetic signal, stored in `.gen` files as
/// whitespace-separated key=value pairs, e.g.
///
///   kind=correlated n=132300 smoothing=50 seed=3 rate=44100
///
/// `kind` (white|correlated) and `n` are required; smoothing defaults to 1,
/// seed to 0 and rate to 44100. '#' starts a comment.
struct GeneratorSpec {
  enum class Kind { white, correlated };

  Kind kind = Kind::white;
  std::size_t n = 0;
  std::size_t smoothing = 1;
  std::uint64_t seed = 0;
  std::uint32_t rate = kDefaultSampleRate;
};

GeneratorSpec parse_generator_spec(std::string_view text);
Signal generate(const GeneratorSpec& spec);

/// `.gen` files are generated, anything else is read as WAV.
Signal load_source(const std::filesystem::path& path);

/// .wav and .gen files (case-insensitive extension) directly inside dir,
/// sorted by file name.
std::vector<std::filesystem::path> list_sources(const std::filesystem::path& dir);

/// approximate -> window codes -> frequencies -> average vector.
AverageVector extract_features(const Signal& signal, const PipelineConfig& cfg);

/// One feature row per source in dir. A failing file aborts with its path in
/// the message; the error code is preserved.
FeatureMatrix build_feature_matrix(const std::filesystem::path& dir,
                                   const PipelineConfig& cfg);

struct ExperimentResult {
  std::vector<std::filesystem::path> files1;
  std::vector<std::filesystem::path> files2;
  BootstrapReport report;
};

ExperimentResult run_experiment(const std::filesystem::path& class1_dir,
                                const std::filesystem::path& class2_dir,
                                const PipelineConfig& cfg);

}  // namespace stepfeat
