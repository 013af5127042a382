#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "stepfeat/csv.hpp"
#include "stepfeat/distribution.hpp"
#include "stepfeat/features.hpp"
#include "stepfeat/generators.hpp"
#include "stepfeat/pipeline.hpp"
#include "stepfeat/report.hpp"
#include "stepfeat/wav.hpp"

namespace stepfeat {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "stepfeat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

double column_sum(const std::string& csv, std::size_t col) {
  double sum = 0;
  auto ls = lines(csv);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::stringstream ss(ls[i]);
    std::string cell;
    for (std::size_t c = 0; c <= col; ++c) std::getline(ss, cell, ',');
    sum += std::stod(cell);
  }
  return sum;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = oracle::temp_dir("cli");
    std::vector<double> sine(8000);
    for (std::size_t i = 0; i < sine.size(); ++i) sine[i] = 0.8 * std::sin(2 * M_PI * 220.0 * i / 44100.0);
    write_wav_pcm16(wav(), Signal(sine, 44100));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path wav() const { return dir_ / "sine.wav"; }
  std::filesystem::path dir_;
};

TEST_F(CliFiles, ApproxMatchesLibrary) {
  const CliRun r = run_cli({"approx", wav().string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const Signal s = load_wav(wav());
  const Approximation a = approximate(s);
  std::ostringstream csv, report;
  write_approx_csv(csv, s, a.levels);
  write_threshold_report(report, a);
  EXPECT_EQ(r.out, csv.str());
  EXPECT_EQ(r.err, report.str());
  EXPECT_EQ(lines(r.out).size(), s.size() + 1);
  EXPECT_EQ(lines(r.out).front(), "index,source_sample,level");
}

TEST_F(CliFiles, OutFileAndReportOnStdout) {
  const auto out = dir_ / "levels.csv";
  const CliRun r = run_cli({"approx", wav().string(), "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("th2="), std::string::npos);
  EXPECT_NE(r.out.find("positive_snr_db="), std::string::npos);
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(lines(read_file(out)).size(), 8001u);

  // The levels CSV feeds the windowed commands directly.
  const CliRun h = run_cli({"hist", out.string()});
  EXPECT_EQ(h.out, run_cli({"hist", wav().string()}).out);
}

TEST_F(CliFiles, HistogramMatchesLibrary) {
  for (const char* lw : {"7", "11"}) {
    const CliRun r = run_cli({"hist", wav().string(), "--lw", lw});
    ASSERT_EQ(r.status, 0) << r.err;
    std::ostringstream expected;
    write_histogram_csv(expected, histogram(approximate(load_wav(wav())).levels, std::stoul(lw)));
    EXPECT_EQ(r.out, expected.str());
    EXPECT_EQ(lines(r.out).size(), 31u);
    EXPECT_NEAR(column_sum(r.out, 1), 1.0, 1e-9);
  }
}

TEST_F(CliFiles, FrequencyRunsAvgvecMatchLibrary) {
  const StepSignal levels = approximate(load_wav(wav())).levels;

  const CliRun f = run_cli({"freq", wav().string()});
  std::ostringstream fe;
  write_frequency_csv(fe, vector_frequencies(levels, 7));
  EXPECT_EQ(f.out, fe.str());
  EXPECT_NEAR(column_sum(f.out, 2), 1.0, 1e-9);

  const CliRun r = run_cli({"runs", wav().string(), "--level", "-2"});
  std::ostringstream re;
  write_runs_csv(re, constant_runs(levels, -2));
  EXPECT_EQ(r.out, re.str());

  const CliRun a = run_cli({"avgvec", wav().string(), "--lw", "5"});
  std::ostringstream ae;
  write_average_vector_csv(ae, average_vector(vector_frequencies(levels, 5)));
  EXPECT_EQ(a.out, ae.str());
  EXPECT_EQ(lines(a.out).size(), 6u);
}

TEST_F(CliFiles, GeneratorFlagsMatchGenerators) {
  const CliRun r = run_cli({"hist", "--gen", "white", "--n", "20000", "--seed", "4"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::ostringstream expected;
  write_histogram_csv(expected, histogram(approximate(gen_white_noise(20000, 4)).levels, 7));
  EXPECT_EQ(r.out, expected.str());

  const CliRun c = run_cli({"freq", "--gen", "correlated", "--n", "5000", "--smoothing", "10", "--seed", "4"});
  std::ostringstream ce;
  write_frequency_csv(ce, vector_frequencies(approximate(gen_correlated(5000, 10, 4)).levels, 7));
  EXPECT_EQ(c.out, ce.str());
}

TEST_F(CliFiles, RunsOnConstantLevels) {
  const auto csv = dir_ / "ones.csv";
  std::ofstream(csv) << "level\n" << std::string() + "1\n1\n1\n1\n1\n1\n1\n1\n1\n1\n";
  const CliRun r = run_cli({"runs", csv.string(), "--level", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "rank,length\n1,10\n");
}

TEST_F(CliFiles, Errors) {
  const CliRun missing = run_cli({"approx", (dir_ / "nope.wav").string()});
  EXPECT_NE(missing.status, 0);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  EXPECT_NE(run_cli({"hist", wav().string(), "--bins", "31"}).status, 0);
  EXPECT_NE(run_cli({"hist"}).status, 0);
  EXPECT_NE(run_cli({"hist", wav().string(), "--gen", "white"}).status, 0);
  EXPECT_NE(run_cli({"bogus"}).status, 0);
  EXPECT_NE(run_cli({}).status, 0);

  const auto bad = dir_ / "bad.csv";
  std::ofstream(bad) << "level\n7\n";
  const CliRun b = run_cli({"runs", bad.string()});
  EXPECT_NE(b.status, 0);
  EXPECT_NE(b.err.find("parse error"), std::string::npos);
}

TEST(CliExperiment, TableJsonAndDeterminism) {
  const auto root = oracle::temp_dir("cli-exp");
  for (const char* cls : {"a", "b"}) {
    std::filesystem::create_directories(root / cls);
    for (int i = 0; i < 4; ++i) {
      std::ofstream(root / cls / ("f" + std::to_string(i) + ".gen"))
          << (std::string(cls) == "a" ? "kind=white" : "kind=correlated smoothing=50") << " n=15000 seed=" << i;
    }
  }
  const std::vector<std::string> base = {"experiment", (root / "a").string(), (root / "b").string(),
                                         "--tests",    "2",                   "--seed",
                                         "3"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  const CliRun table = run_cli(base);
  ASSERT_EQ(table.status, 0) << table.err;
  EXPECT_NE(table.out.find("a, total 2"), std::string::npos);
  EXPECT_EQ(lines(table.out).size(), 4u);  // header, 2 iterations, mean

  const CliRun json = run_cli(with({"--json", "--out", (root / "r.json").string()}));
  ASSERT_EQ(json.status, 0) << json.err;
  EXPECT_EQ(json.out, read_file(root / "r.json"));
  EXPECT_EQ(json.out, run_cli(with({"--json"})).out);
  EXPECT_NE(json.out.find("\"correct1\""), std::string::npos);

  PipelineConfig cfg;
  cfg.num_tests = 2;
  cfg.seed = 3;
  EXPECT_EQ(json.out, experiment_json(run_experiment(root / "a", root / "b", cfg), cfg));

  std::filesystem::remove(root / "a" / "f1.gen");
  std::filesystem::remove(root / "a" / "f2.gen");
  std::filesystem::remove(root / "a" / "f3.gen");
  EXPECT_NE(run_cli(base).status, 0);
  std::filesystem::remove_all(root);
}

TEST(CliBinary, ExitStatusAndStreams) {
  const auto dir = oracle::temp_dir("cli-bin");
  const std::string bin = STEPFEAT_CLI_PATH;
  const std::string out = (dir / "o.txt").string(), err = (dir / "e.txt").string();
  const std::string ok = bin + " hist --gen white --n 5000 --seed 2 >" + out + " 2>" + err;
  EXPECT_EQ(std::system(ok.c_str()), 0);
  EXPECT_EQ(lines(read_file(out)).size(), 31u);
  EXPECT_TRUE(read_file(err).empty());

  const std::string bad = bin + " approx " + (dir / "missing.wav").string() + " >" + out + " 2>" + err;
  EXPECT_NE(std::system(bad.c_str()), 0);
  EXPECT_TRUE(read_file(out).empty());
  EXPECT_FALSE(read_file(err).empty());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace stepfeat
