#include "stepfeat/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "stepfeat/distribution.hpp"
#include "stepfeat/error.hpp"
#include "stepfeat/generators.hpp"
#include "stepfeat/wav.hpp"

namespace stepfeat {

namespace {

template <class T>
T parse_uint(std::string_view key, std::string_view value) {
  T out{};
  auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    fail(Errc::parse_error, "generator spec: invalid value '" + std::string(value) + "' for " + std::string(key));
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  bool have_kind = false, have_n = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      const auto eq = word.find('=');
      if (eq == std::string::npos) fail(Errc::parse_error, "generator spec: expected key=value, got '" + word + "'");
      const std::string key = word.substr(0, eq);
      const std::string_view value = std::string_view(word).substr(eq + 1);
      if (key == "kind") {
        if (value == "white") {
          spec.kind = GeneratorSpec::Kind::white;
        } else if (value == "correlated") {
          spec.kind = GeneratorSpec::Kind::correlated;
        } else {
          fail(Errc::parse_error, "generator spec: unknown kind '" + std::string(value) + "'");
        }
        have_kind = true;
      } else if (key == "n") {
        spec.n = parse_uint<std::size_t>(key, value);
        have_n = true;
      } else if (key == "smoothing") {
        spec.smoothing = parse_uint<std::size_t>(key, value);
      } else if (key == "seed") {
        spec.seed = parse_uint<std::uint64_t>(key, value);
      } else if (key == "rate") {
        spec.rate = parse_uint<std::uint32_t>(key, value);
      } else {
        fail(Errc::parse_error, "generator spec: unknown key '" + key + "'");
      }
    }
  }
  if (!have_kind || !have_n) fail(Errc::parse_error, "generator spec needs kind= and n=");
  return spec;
}

Signal generate(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorSpec::Kind::white) return gen_white_noise(spec.n, spec.seed, spec.rate);
  return gen_correlated(spec.n, spec.smoothing, spec.seed, spec.rate);
}

Signal load_source(const std::filesystem::path& path) {
  if (lower(path.extension().string()) != ".gen") return load_wav(path);
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return generate(parse_generator_spec(text.str()));
}

std::vector<std::filesystem::path> list_sources(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) fail(Errc::io_error, dir.string() + " is not a directory");
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = lower(entry.path().extension().string());
    if (ext == ".wav" || ext == ".gen") out.push_back(entry.path());
  }
  if (ec) fail(Errc::io_error, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  return out;
}

AverageVector extract_features(const Signal& signal, const PipelineConfig& cfg) {
  const Approximation approx = approximate(signal, cfg.search);
  return average_vector(vector_frequencies(approx.levels, cfg.lw));
}

FeatureMatrix build_feature_matrix(const std::filesystem::path& dir, const PipelineConfig& cfg) {
  const auto files = list_sources(dir);
  if (files.size() < 2)
    fail(Errc::invalid_argument, dir.string() + " holds " + std::to_string(files.size()) +
                                     " audio/generator files; at least 2 are needed");
  std::vector<std::vector<double>> rows;
  rows.reserve(files.size());
  for (const auto& file : files) {
    try {
      rows.push_back(extract_features(load_source(file), cfg).components);
    } catch (const Error& e) {
      throw Error(e.code(), file.string() + ": " + e.what());
    }
  }
  return FeatureMatrix(std::move(rows), dir.filename().string());
}

ExperimentResult run_experiment(const std::filesystem::path& class1_dir, const std::filesystem::path& class2_dir,
                                const PipelineConfig& cfg) {
  ExperimentResult result;
  result.files1 = list_sources(class1_dir);
  result.files2 = list_sources(class2_dir);
  const FeatureMatrix m1 = build_feature_matrix(class1_dir, cfg);
  const FeatureMatrix m2 = build_feature_matrix(class2_dir, cfg);
  result.report = bootstrap_evaluate(m1, m2, cfg.num_tests, cfg.seed, cfg.train);
  return result;
}

}  // namespace stepfeat
