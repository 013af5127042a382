#include "stepfeat/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "stepfeat/csv.hpp"

namespace stepfeat {

std::string format_report_table(const BootstrapReport& report, const std::string& label1,
                                const std::string& label2) {
  std::ostringstream os;
  const std::size_t total1 = report.iterations.empty() ? 0 : report.iterations.front().held_out1;
  const std::size_t total2 = report.iterations.empty() ? 0 : report.iterations.front().held_out2;
  const std::string head1 = label1 + ", total " + std::to_string(total1);
  const std::string head2 = label2 + ", total " + std::to_string(total2);
  const std::size_t w1 = std::max<std::size_t>(head1.size(), 4);

  auto cell = [](std::ostringstream& out, const std::string& s, std::size_t width) {
    out << s << std::string(width - std::min(width, s.size()), ' ');
  };
  os << "iter  ";
  cell(os, head1, w1);
  os << "  " << head2 << '\n';
  for (std::size_t i = 0; i < report.iterations.size(); ++i) {
    const auto& it = report.iterations[i];
    std::string n = std::to_string(i + 1);
    os << n << std::string(6 - std::min<std::size_t>(6, n.size()), ' ');
    cell(os, std::to_string(it.correct1), w1);
    os << "  " << it.correct2 << '\n';
  }
  os << "mean accuracy " << format_real(report.mean_accuracy()) << '\n';
  return os.str();
}

std::string experiment_json(const ExperimentResult& result, const PipelineConfig& cfg) {
  nlohmann::ordered_json config = {
      {"lw", cfg.lw},
      {"bins", kHistogramBins},
      {"search_start", cfg.search.start},
      {"search_step", cfg.search.step},
      {"search_units", cfg.search.units == GridUnits::fraction_of_max ? "fraction_of_max" : "normalized"},
      {"seed", cfg.seed},
      {"num_tests", cfg.num_tests},
      {"learning_rate", cfg.train.learning_rate},
      {"epochs", cfg.train.epochs},
      {"init_range", cfg.train.init_range},
  };
  auto names = [](const std::vector<std::filesystem::path>& files) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : files) arr.push_back(f.filename().string());
    return arr;
  };
  config["files1"] = names(result.files1);
  config["files2"] = names(result.files2);

  nlohmann::ordered_json iterations = nlohmann::ordered_json::array();
  for (const auto& it : result.report.iterations)
    iterations.push_back({{"correct1", it.correct1},
                          {"correct2", it.correct2},
                          {"total1", it.held_out1},
                          {"total2", it.held_out2}});

  nlohmann::ordered_json doc = {{"config", config}, {"iterations", iterations}};
  return doc.dump(2) + "\n";
}

}  // namespace stepfeat
