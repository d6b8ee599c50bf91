#include "trustrecruit/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

double parse_real(const std::string& key, const std::string& value) {
  double v;
  auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    fail("config key '" + key + "': cannot parse real '" + value + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t v;
  auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    fail("config key '" + key + "': cannot parse integer '" + value + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return parts;
}

std::array<double, 3> parse_triple(const std::string& key, const std::string& value) {
  auto parts = split(value, ',');
  if (parts.size() != 3) fail("config key '" + key + "': expected 3 comma-separated reals");
  return {parse_real(key, parts[0]), parse_real(key, parts[1]),
          parse_real(key, parts[2])};
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

const char* strategy_name(StrategyKind s) {
  switch (s) {
    case StrategyKind::OneHop: return "onehop";
    case StrategyKind::MultiHop: return "multihop";
    case StrategyKind::MultiHopFS: return "multihop_fs";
  }
  return "?";
}

std::optional<StrategyKind> strategy_from_name(const std::string& name) {
  if (name == "onehop") return StrategyKind::OneHop;
  if (name == "multihop") return StrategyKind::MultiHop;
  if (name == "multihop_fs") return StrategyKind::MultiHopFS;
  return std::nullopt;
}

void apply_config_entry(SimConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "graph_path") cfg.graph_path = value;
  else if (key == "seed") cfg.seed = parse_uint(key, value);
  else if (key == "intervals") cfg.intervals = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "tasks_per_interval") cfg.tasks_per_interval = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "hop_limit") cfg.hop_limit = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "th1") cfg.th1 = parse_real(key, value);
  else if (key == "th2") cfg.th2 = parse_real(key, value);
  else if (key == "revocation") cfg.revocation = parse_real(key, value);
  else if (key == "eligibility") cfg.eligibility = parse_real(key, value);
  else if (key == "suggestion_max") cfg.suggestion_max = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "num_requesters") cfg.num_requesters = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "topics") cfg.topics = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "regions") cfg.regions = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "locality_threshold") cfg.locality_threshold = parse_real(key, value);
  else if (key == "expertise_threshold") cfg.expertise_threshold = parse_real(key, value);
  else if (key == "p_respond") cfg.p_respond = parse_real(key, value);
  else if (key == "sigma_qoc") cfg.sigma_qoc = parse_real(key, value);
  else if (key == "sigma_re") cfg.sigma_re = parse_real(key, value);
  else if (key == "top_weights") {
    auto parts = split(value, ',');
    if (parts.size() != 5) fail("config key 'top_weights': expected 5 comma-separated reals");
    for (std::size_t i = 0; i < 5; ++i) cfg.top_weights[i] = parse_real(key, parts[i]);
  } else if (key == "strategies") {
    cfg.strategies.clear();
    for (const auto& part : split(value, ',')) {
      auto s = strategy_from_name(trim(part));
      if (!s) fail("config key 'strategies': unknown strategy '" + part + "'");
      cfg.strategies.push_back(*s);
    }
  } else if (key == "fixture_seed") cfg.fixture_seed = parse_uint(key, value);
  else if (key == "fixture_nodes") cfg.fixture_nodes = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "fixture_edges") cfg.fixture_edges = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "fixture_histogram") {
    cfg.fixture_histogram.clear();
    for (const auto& part : split(value, ',')) {
      auto kv = split(part, ':');
      if (kv.size() != 2) fail("config key 'fixture_histogram': expected rating:count pairs");
      cfg.fixture_histogram[parse_real(key, kv[0])] =
          static_cast<std::size_t>(parse_uint(key, kv[1]));
    }
  } else if (key == "fuzzy_low") cfg.fuzzy_low = parse_triple(key, value);
  else if (key == "fuzzy_med") cfg.fuzzy_med = parse_triple(key, value);
  else if (key == "fuzzy_high") cfg.fuzzy_high = parse_triple(key, value);
  else if (key == "fuzzy_rules") cfg.fuzzy_rules = value;
  else fail("unknown config key '" + key + "'");
}

void validate_config(const SimConfig& cfg) {
  auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!(cfg.th2 < cfg.th1)) fail("config invariant violated: th2 must be < th1");
  for (auto [name, v] : std::initializer_list<std::pair<const char*, double>>{
           {"th1", cfg.th1}, {"th2", cfg.th2}, {"revocation", cfg.revocation},
           {"eligibility", cfg.eligibility}, {"p_respond", cfg.p_respond},
           {"locality_threshold", cfg.locality_threshold},
           {"expertise_threshold", cfg.expertise_threshold}}) {
    if (!in01(v)) fail(std::string("config value out of [0,1]: ") + name);
  }
  if (cfg.sigma_qoc < 0.0 || cfg.sigma_re < 0.0) fail("sigma values must be >= 0");
  if (cfg.hop_limit < 1) fail("hop_limit must be >= 1");
  if (cfg.topics < 1 || cfg.regions < 1) fail("topics and regions must be >= 1");
  if (cfg.num_requesters < 1) fail("num_requesters must be >= 1");
  double sum = 0.0;
  for (double w : cfg.top_weights) {
    if (w < 0.0) fail("top_weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail("top_weights must sum to 1");
  if (cfg.strategies.empty()) fail("strategies must not be empty");
  std::size_t hist_sum = 0;
  for (const auto& [rating, count] : cfg.fixture_histogram) {
    if (!in01(rating)) fail("fixture_histogram rating out of [0,1]");
    hist_sum += count;
  }
  if (cfg.graph_path == "synthetic" && hist_sum != cfg.fixture_edges)
    fail("fixture_histogram counts must sum to fixture_edges");
  if (cfg.fuzzy_rules.size() != 11)  // "lll,lmm,lhh"
    fail("fuzzy_rules must be three comma-separated groups of three l/m/h letters");
}

SimConfig parse_config(const std::optional<std::string>& file_path,
                       const std::vector<std::string>& overrides) {
  SimConfig cfg;
  if (file_path) {
    std::ifstream in(*file_path);
    if (!in) fail("cannot open config file: " + *file_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      std::size_t eq = t.find('=');
      if (eq == std::string::npos)
        fail(*file_path + ":" + std::to_string(lineno) + ": expected key=value");
      apply_config_entry(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
  }
  for (const auto& ov : overrides) {
    std::size_t eq = ov.find('=');
    if (eq == std::string::npos) fail("override must be key=value: '" + ov + "'");
    apply_config_entry(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
  }
  validate_config(cfg);
  return cfg;
}

std::string serialize_config(const SimConfig& cfg) {
  std::ostringstream out;
  out << "graph_path=" << cfg.graph_path << '\n';
  out << "seed=" << cfg.seed << '\n';
  out << "intervals=" << cfg.intervals << '\n';
  out << "tasks_per_interval=" << cfg.tasks_per_interval << '\n';
  out << "hop_limit=" << cfg.hop_limit << '\n';
  out << "th1=" << format_double(cfg.th1) << '\n';
  out << "th2=" << format_double(cfg.th2) << '\n';
  out << "revocation=" << format_double(cfg.revocation) << '\n';
  out << "eligibility=" << format_double(cfg.eligibility) << '\n';
  out << "suggestion_max=" << cfg.suggestion_max << '\n';
  out << "num_requesters=" << cfg.num_requesters << '\n';
  out << "topics=" << cfg.topics << '\n';
  out << "regions=" << cfg.regions << '\n';
  out << "locality_threshold=" << format_double(cfg.locality_threshold) << '\n';
  out << "expertise_threshold=" << format_double(cfg.expertise_threshold) << '\n';
  out << "p_respond=" << format_double(cfg.p_respond) << '\n';
  out << "sigma_qoc=" << format_double(cfg.sigma_qoc) << '\n';
  out << "sigma_re=" << format_double(cfg.sigma_re) << '\n';
  out << "top_weights=";
  for (std::size_t i = 0; i < 5; ++i)
    out << (i ? "," : "") << format_double(cfg.top_weights[i]);
  out << '\n';
  out << "strategies=";
  for (std::size_t i = 0; i < cfg.strategies.size(); ++i)
    out << (i ? "," : "") << strategy_name(cfg.strategies[i]);
  out << '\n';
  out << "fixture_seed=" << cfg.fixture_seed << '\n';
  out << "fixture_nodes=" << cfg.fixture_nodes << '\n';
  out << "fixture_edges=" << cfg.fixture_edges << '\n';
  out << "fixture_histogram=";
  bool first = true;
  for (const auto& [rating, count] : cfg.fixture_histogram) {
    out << (first ? "" : ",") << format_double(rating) << ':' << count;
    first = false;
  }
  out << '\n';
  auto triple = [](const std::array<double, 3>& t) {
    return format_double(t[0]) + "," + format_double(t[1]) + "," + format_double(t[2]);
  };
  out << "fuzzy_low=" << triple(cfg.fuzzy_low) << '\n';
  out << "fuzzy_med=" << triple(cfg.fuzzy_med) << '\n';
  out << "fuzzy_high=" << triple(cfg.fuzzy_high) << '\n';
  out << "fuzzy_rules=" << cfg.fuzzy_rules << '\n';
  return out.str();
}

}  // namespace trustrecruit
