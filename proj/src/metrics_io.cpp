#include "trustrecruit/metrics_io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string opt_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

std::string metrics_csv(const std::vector<IntervalMetrics>& intervals) {
  std::string out = "interval,avg_participants,avg_mrt,avg_overall_trust,campaigns\n";
  for (const IntervalMetrics& m : intervals) {
    out += std::to_string(m.interval);
    out += ',';
    out += opt_field(m.avg_participants);
    out += ',';
    out += opt_field(m.avg_mrt);
    out += ',';
    out += opt_field(m.avg_overall_trust);
    out += ',';
    out += std::to_string(m.campaigns);
    out += '\n';
  }
  return out;
}

std::string suggestions_csv(const std::vector<SuggestionRecord>& records) {
  std::string out = "interval,requester,participant,implicit_trust,intermediate_count\n";
  for (const SuggestionRecord& r : records) {
    out += std::to_string(r.interval);
    out += ',';
    out += r.requester;
    out += ',';
    out += r.participant;
    out += ',';
    out += format_double(r.implicit_trust);
    out += ',';
    out += std::to_string(r.intermediate_count);
    out += '\n';
  }
  return out;
}

std::vector<std::string> write_metrics_csv(
    const std::vector<StrategySeries>& series, const SimConfig& cfg,
    const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  for (const StrategySeries& s : series) {
    std::string path =
        out_dir + "/metrics_" + strategy_name(s.strategy) + ".csv";
    write_file(path, metrics_csv(s.intervals));
    written.push_back(path);
    if (s.strategy == StrategyKind::MultiHopFS) {
      std::string spath =
          out_dir + "/suggestions_" + strategy_name(s.strategy) + ".csv";
      write_file(spath, suggestions_csv(s.suggestions));
      written.push_back(spath);
    }
  }
  std::string manifest = out_dir + "/run.txt";
  write_file(manifest, serialize_config(cfg));
  written.push_back(manifest);
  return written;
}

}  // namespace trustrecruit
