#include "cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stepfeat/csv.hpp"
#include "stepfeat/distribution.hpp"
#include "stepfeat/error.hpp"
#include "stepfeat/features.hpp"
#include "stepfeat/pipeline.hpp"
#include "stepfeat/quantizer.hpp"
#include "stepfeat/report.hpp"

namespace stepfeat::cli {

namespace {

struct Options {
  std::string input;
  std::string gen;
  std::size_t n = 132300;
  std::size_t smoothing = 50;
  std::size_t lw = 7;
  std::size_t bins = kHistogramBins;
  double start = SearchConfig{}.start;
  double step = SearchConfig{}.step;
  std::string grid = "fraction";
  std::uint64_t seed = 0;
  std::size_t tests = 5;
  std::size_t epochs = TrainConfig{}.epochs;
  double learning_rate = TrainConfig{}.learning_rate;
  int level = 1;
  std::string out;
  std::string class1;
  std::string class2;
  bool json = false;
};

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "WAV or .gen file (or, except for approx, a levels CSV)");
  cmd->add_option("--gen", o.gen, "Use a synthetic source instead of a file")
      ->check(CLI::IsMember({"white", "correlated"}));
  cmd->add_option("--n", o.n, "Synthetic source length in samples")->check(CLI::PositiveNumber);
  cmd->add_option("--smoothing", o.smoothing, "Moving-average length for --gen correlated")
      ->check(CLI::PositiveNumber);
}

void add_search_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--start", o.start, "First threshold of the search grid")->check(CLI::PositiveNumber);
  cmd->add_option("--step", o.step, "Search grid step")->check(CLI::PositiveNumber);
  cmd->add_option("--grid", o.grid, "Units of --start/--step: fraction (of max) or normalized")
      ->check(CLI::IsMember({"fraction", "normalized"}));
}

void add_common(CLI::App* cmd, Options& o, bool windowed) {
  cmd->add_option("--seed", o.seed, "Seed for synthetic sources, shuffles and weight init");
  cmd->add_option("--out", o.out, "Write data to this file instead of stdout");
  if (windowed) {
    cmd->add_option("--lw", o.lw, "Window length")->check(CLI::Range(std::size_t{1}, kMaxWindow));
    cmd->add_option("--bins", o.bins, "Histogram bins (fixed at 30)")
        ->check(CLI::Range(kHistogramBins, kHistogramBins));
  }
}

SearchConfig search_config(const Options& o) {
  return SearchConfig{o.start, o.step, o.grid == "normalized" ? GridUnits::normalized : GridUnits::fraction_of_max};
}

Signal load_input(const Options& o) {
  if (!o.gen.empty()) {
    if (!o.input.empty()) fail(Errc::invalid_argument, "give either an input file or --gen, not both");
    GeneratorSpec spec;
    spec.kind = o.gen == "white" ? GeneratorSpec::Kind::white : GeneratorSpec::Kind::correlated;
    spec.n = o.n;
    spec.smoothing = o.smoothing;
    spec.seed = o.seed;
    return generate(spec);
  }
  if (o.input.empty()) fail(Errc::invalid_argument, "no input file (or --gen) given");
  return load_source(o.input);
}

bool is_levels_csv(const std::string& path) {
  auto ext = std::filesystem::path(path).extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".csv";
}

// A .csv input already holds step levels; anything else is approximated.
StepSignal load_levels(const Options& o) {
  if (o.gen.empty() && is_levels_csv(o.input)) return load_levels_csv(o.input);
  return approximate(load_input(o), search_config(o)).levels;
}

// Routes data to --out when given, otherwise to the caller's stream.
class DataSink {
 public:
  DataSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.emplace(path, std::ios::binary);
      if (!*file_) fail(Errc::io_error, "cannot create " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : fallback_; }
  bool to_file() const { return file_.has_value(); }
  void finish() {
    stream().flush();
    if (!stream()) fail(Errc::io_error, "failed writing output");
  }

 private:
  std::ostream& fallback_;
  std::optional<std::ofstream> file_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Five-level stepwise approximation, window-code statistics and bootstrap language identification"};
  app.require_subcommand(1);
  Options o;

  auto* approx = app.add_subcommand("approx", "Step approximation CSV (index,source_sample,level) and thresholds");
  add_source_options(approx, o);
  add_search_options(approx, o);
  add_common(approx, o, false);

  auto* hist = app.add_subcommand("hist", "30-bin histogram of window codes (bin_center,bin_value)");
  auto* freq = app.add_subcommand("freq", "Relative frequency of each window code (code,count,frequency)");
  auto* runs = app.add_subcommand("runs", "Constant-run lengths of one level, longest first (rank,length)");
  auto* avgvec = app.add_subcommand("avgvec", "Average vector over positive codes (position,value)");
  for (auto* cmd : {hist, freq, runs, avgvec}) {
    add_source_options(cmd, o);
    add_search_options(cmd, o);
    add_common(cmd, o, true);
  }
  runs->add_option("--level", o.level, "Level whose runs are collected")->check(CLI::Range(-2, 2));

  auto* experiment = app.add_subcommand("experiment", "Bootstrap two-class recognition over two directories");
  experiment->add_option("class1", o.class1, "Directory of class-1 .wav/.gen files")->required();
  experiment->add_option("class2", o.class2, "Directory of class-2 .wav/.gen files")->required();
  add_search_options(experiment, o);
  add_common(experiment, o, true);
  experiment->add_option("--tests", o.tests, "Bootstrap iterations")->check(CLI::PositiveNumber);
  experiment->add_option("--epochs", o.epochs, "Training epochs per iteration");
  experiment->add_option("--learning-rate", o.learning_rate, "Gradient-descent step")->check(CLI::PositiveNumber);
  experiment->add_flag("--json", o.json, "Print the JSON report on stdout instead of the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (experiment->parsed()) {
      PipelineConfig cfg;
      cfg.lw = o.lw;
      cfg.search = search_config(o);
      cfg.seed = o.seed;
      cfg.num_tests = o.tests;
      cfg.train.epochs = o.epochs;
      cfg.train.learning_rate = o.learning_rate;
      const ExperimentResult result = run_experiment(o.class1, o.class2, cfg);
      const std::string json = experiment_json(result, cfg);
      if (!o.out.empty()) {
        DataSink sink(o.out, out);
        sink.stream() << json;
        sink.finish();
      }
      if (o.json) {
        out << json;
      } else {
        const auto label = [](const std::string& dir) { return std::filesystem::path(dir).filename().string(); };
        out << format_report_table(result.report, label(o.class1), label(o.class2));
      }
      return 0;
    }

    if (approx->parsed()) {
      const Signal signal = load_input(o);
      const Approximation a = approximate(signal, search_config(o));
      DataSink sink(o.out, out);
      write_approx_csv(sink.stream(), signal, a.levels);
      sink.finish();
      write_threshold_report(sink.to_file() ? out : err, a);
      return 0;
    }

    const StepSignal levels = load_levels(o);
    DataSink sink(o.out, out);
    std::ostream& data = sink.stream();
    if (hist->parsed()) {
      write_histogram_csv(data, histogram(levels, o.lw));
    } else if (freq->parsed()) {
      write_frequency_csv(data, vector_frequencies(levels, o.lw));
    } else if (runs->parsed()) {
      write_runs_csv(data, constant_runs(levels, static_cast<Level>(o.level)));
    } else if (avgvec->parsed()) {
      write_average_vector_csv(data, average_vector(vector_frequencies(levels, o.lw)));
    }
    sink.finish();
    return 0;
  } catch (const Error& e) {
    err << "stepfeat: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "stepfeat: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace stepfeat::cli
