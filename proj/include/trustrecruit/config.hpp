#ifndef TRUSTRECRUIT_CONFIG_HPP
#define TRUSTRECRUIT_CONFIG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trustrecruit {

enum class StrategyKind { OneHop, MultiHop, MultiHopFS };

const char* strategy_name(StrategyKind s);
std::optional<StrategyKind> strategy_from_name(const std::string& name);

/// Full simulation configuration. Flat key=value file format; later sources
/// win (defaults < file < flag overrides).
struct SimConfig {
  std::string graph_path = "synthetic";  // edge-list path, or "synthetic"
  std::uint64_t seed = 1;
  std::uint32_t intervals = 20;
  std::uint32_t tasks_per_interval = 30;
  std::uint32_t hop_limit = 3;  // L
  double th1 = 0.7;             // reward threshold on ToC
  double th2 = 0.3;             // penalty threshold on ToC
  double revocation = 0.5;
  double eligibility = 0.5;
  std::uint32_t suggestion_max = 50;
  std::uint32_t num_requesters = 20;
  std::uint32_t topics = 10;
  std::uint32_t regions = 10;
  double locality_threshold = 0.5;
  double expertise_threshold = 0.5;
  double p_respond = 0.8;
  double sigma_qoc = 0.1;
  double sigma_re = 0.1;
  // (expertise, timeliness, locality, friendship duration, interaction timegap)
  std::array<double, 5> top_weights = {0.35, 0.2, 0.35, 0.05, 0.05};
  std::vector<StrategyKind> strategies = {
      StrategyKind::OneHop, StrategyKind::MultiHop, StrategyKind::MultiHopFS};

  // Synthetic fixture parameters (graph_path == "synthetic"). The fixture
  // seed is independent of `seed` so behavioral seeds can vary over a fixed
  // graph.
  std::uint64_t fixture_seed = 20071013;
  std::uint32_t fixture_nodes = 14019;
  std::uint32_t fixture_edges = 47347;
  std::map<double, std::size_t> fixture_histogram = {
      {0.8, 17306}, {0.6, 21353}, {0.4, 8688}};

  // Fuzzy system overrides: triangle vertex triples for the low/med/high
  // levels (shared by both inputs and the output) and the 3x3 rule table as
  // nine level letters (l/m/h), QoC-major.
  std::array<double, 3> fuzzy_low = {0.0, 0.0, 0.5};
  std::array<double, 3> fuzzy_med = {0.0, 0.5, 1.0};
  std::array<double, 3> fuzzy_high = {0.5, 1.0, 1.0};
  std::string fuzzy_rules = "lll,lmm,lhh";

  bool operator==(const SimConfig&) const = default;
};

/// Resolves defaults <- optional file <- overrides, then validates.
/// Overrides are "key=value" strings. Throws on unknown keys, unparsable
/// values, or invariant violations (e.g. th2 >= th1).
SimConfig parse_config(const std::optional<std::string>& file_path,
                       const std::vector<std::string>& overrides);

/// Applies one key=value assignment to an existing config.
void apply_config_entry(SimConfig& cfg, const std::string& key,
                        const std::string& value);

void validate_config(const SimConfig& cfg);

/// key=value serialization; parse_config on the output reproduces the
/// config exactly (manifest round-trip).
std::string serialize_config(const SimConfig& cfg);

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_CONFIG_HPP
