// trustrecruit: deterministic simulator for trust-based multi-hop
// participant recruitment on a web of trust.
//
//   trustrecruit run      -- run the campaign simulation, emit CSV metrics
//   trustrecruit stats    -- node/edge counts and rating histogram of a graph
//   trustrecruit routes   -- enumerate routes between two nodes
//   trustrecruit fixture  -- generate a synthetic Advogato-scale graph

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trustrecruit/config.hpp"
#include "trustrecruit/fixture.hpp"
#include "trustrecruit/metrics_io.hpp"
#include "trustrecruit/recruitment.hpp"
#include "trustrecruit/simulation.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace {

using namespace trustrecruit;

int cmd_run(const std::optional<std::string>& config_file,
            const std::vector<std::string>& overrides,
            const std::string& out_dir) {
  SimConfig cfg = parse_config(config_file, overrides);
  auto series = run_simulation(cfg);
  auto written = write_metrics_csv(series, cfg, out_dir);
  for (const auto& path : written) std::cout << path << '\n';
  return 0;
}

int cmd_stats(const std::string& graph_file) {
  TrustGraph g = load_trust_graph(graph_file, RatingMapping::advogato());
  GraphStats s = g.stats();
  std::cout << "nodes " << s.node_count << '\n';
  std::cout << "edges " << s.edge_count << '\n';
  for (const auto& [rating, count] : s.rating_histogram)
    std::cout << "rating " << format_double(rating) << " " << count << '\n';
  return 0;
}

int cmd_routes(const std::string& graph_file, const std::string& from,
               const std::string& to, std::uint32_t hops) {
  TrustGraph g = load_trust_graph(graph_file, RatingMapping::advogato());
  NodeIndex src = g.find(from);
  NodeIndex dst = g.find(to);
  if (src == kInvalidNode) throw std::runtime_error("unknown node: " + from);
  if (dst == kInvalidNode) throw std::runtime_error("unknown node: " + to);
  auto routes = enumerate_routes(g, src, dst, hops);
  for (const Route& r : routes) {
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      std::cout << (i ? " " : "") << g.id_of(r.nodes[i]);
    std::cout << "  trust=" << format_double(r.trust)
              << "  hops=" << r.length() << '\n';
  }
  if (auto best = best_route(g, src, dst, hops)) {
    std::cout << "best:";
    for (NodeIndex n : best->nodes) std::cout << ' ' << g.id_of(n);
    std::cout << "  trust=" << format_double(best->trust) << '\n';
  } else {
    std::cout << "best: unreachable within " << hops << " hops\n";
  }
  return 0;
}

int cmd_fixture(const std::string& out_file, std::uint64_t seed,
                std::uint32_t nodes, std::uint32_t edges,
                const std::string& hist_spec) {
  SimConfig tmp;  // reuse the config histogram parser
  apply_config_entry(tmp, "fixture_histogram", hist_spec);
  std::string text = generate_fixture(seed, nodes, edges, tmp.fixture_histogram);
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_file);
  out << text;
  std::cout << out_file << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trust-based multi-hop recruitment simulator"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run the simulation and write CSV metrics");
  std::optional<std::string> config_file;
  std::vector<std::string> overrides;
  std::string out_dir = "out";
  run->add_option("-c,--config", config_file, "key=value config file");
  run->add_option("-s,--set", overrides, "config override (key=value), repeatable");
  run->add_option("-o,--out", out_dir, "output directory")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "print graph statistics");
  std::string stats_file;
  stats->add_option("graph", stats_file, "edge-list file")->required();

  auto* routes = app.add_subcommand("routes", "enumerate routes between two nodes");
  std::string routes_file, from, to;
  std::uint32_t hops = 3;
  routes->add_option("graph", routes_file, "edge-list file")->required();
  routes->add_option("--from", from, "source node id")->required();
  routes->add_option("--to", to, "destination node id")->required();
  routes->add_option("-L,--hops", hops, "hop limit")->capture_default_str();

  auto* fixture = app.add_subcommand("fixture", "generate a synthetic trust graph");
  std::string fixture_out = "fixture.txt";
  std::uint64_t fseed = 20071013;
  std::uint32_t fnodes = 14019, fedges = 47347;
  std::string fhist = "0.8:17306,0.6:21353,0.4:8688";
  fixture->add_option("-o,--out", fixture_out, "output file")->capture_default_str();
  fixture->add_option("--seed", fseed, "generator seed")->capture_default_str();
  fixture->add_option("--nodes", fnodes, "node count")->capture_default_str();
  fixture->add_option("--edges", fedges, "edge count")->capture_default_str();
  fixture->add_option("--hist", fhist, "rating:count pairs")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_file, overrides, out_dir);
    if (stats->parsed()) return cmd_stats(stats_file);
    if (routes->parsed()) return cmd_routes(routes_file, from, to, hops);
    if (fixture->parsed())
      return cmd_fixture(fixture_out, fseed, fnodes, fedges, fhist);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
