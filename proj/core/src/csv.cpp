#include "stepfeat/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "stepfeat/error.hpp"

namespace stepfeat {

std::string format_real(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_approx_csv(std::ostream& os, const Signal& source, const StepSignal& levels) {
  os << "index,source_sample,level\n";
  for (std::size_t i = 0; i < source.size(); ++i)
    os << i << ',' << format_real(source[i]) << ',' << static_cast<int>(levels[i]) << '\n';
}

void write_histogram_csv(std::ostream& os, const CodeHistogram& h) {
  os << "bin_center,bin_value\n";
  for (std::size_t i = 0; i < kHistogramBins; ++i)
    os << format_real(h.bin_center(i)) << ',' << format_real(h.bin_values[i]) << '\n';
}

void write_frequency_csv(std::ostream& os, const VectorDistribution& d) {
  os << "code,count,frequency\n";
  for (const auto& [code, f] : d.frequencies()) os << code << ',' << d.count(code) << ',' << format_real(f) << '\n';
}

void write_runs_csv(std::ostream& os, const RunReport& r) {
  os << "rank,length\n";
  for (std::size_t i = 0; i < r.lengths.size(); ++i) os << i + 1 << ',' << r.lengths[i] << '\n';
}

void write_average_vector_csv(std::ostream& os, const AverageVector& v) {
  os << "position,value\n";
  for (std::size_t k = 0; k < v.components.size(); ++k) os << k << ',' << format_real(v.components[k]) << '\n';
}

StepSignal read_levels_csv(std::istream& is) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  std::string line;
  if (!std::getline(is, line)) fail(Errc::parse_error, "levels CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  std::size_t column = header.size();
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == "level") column = i;
  if (column == header.size()) fail(Errc::parse_error, "levels CSV has no 'level' column");

  std::vector<Level> levels;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    int v = 0;
    const std::string& cell = column < cells.size() ? cells[column] : std::string();
    auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || res.ec != std::errc{} || res.ptr != cell.data() + cell.size() || !is_level(v))
      fail(Errc::parse_error, "levels CSV row " + std::to_string(row) + ": bad level '" + cell + "'");
    levels.push_back(static_cast<Level>(v));
  }
  if (levels.empty()) fail(Errc::empty_data, "levels CSV has no rows");
  return StepSignal(std::move(levels));
}

StepSignal load_levels_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path.string());
  return read_levels_csv(in);
}

void write_threshold_report(std::ostream& os, const Approximation& a) {
  auto snr_text = [](const Snr& s) { return s.is_perfect() ? std::string("perfect") : format_real(s.db()); };
  os << "th0=" << format_real(a.thresholds.th0()) << '\n'
     << "th1=" << format_real(a.thresholds.th1()) << '\n'
     << "th2=" << format_real(a.thresholds.th2()) << '\n'
     << "th3=" << format_real(a.thresholds.th3()) << '\n'
     << "positive_snr_db=" << snr_text(a.positive_snr) << '\n'
     << "negative_snr_db=" << snr_text(a.negative_snr) << '\n';
}

}  // namespace stepfeat
