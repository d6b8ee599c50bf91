#ifndef TRUSTRECRUIT_SIMULATION_HPP
#define TRUSTRECRUIT_SIMULATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "trustrecruit/behavior.hpp"
#include "trustrecruit/config.hpp"
#include "trustrecruit/recruitment.hpp"
#include "trustrecruit/suggestion.hpp"
#include "trustrecruit/trust_engine.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

struct CampaignResult {
  std::uint64_t task_id = 0;
  std::size_t recruited = 0;  // responders whose contribution reached the server
  std::vector<Route> routes;  // all selected routes (MRT input)
  std::vector<Contribution> contributions;
  std::optional<double> overall_trust;
  std::optional<double> mrt;
};

struct IntervalMetrics {
  std::uint32_t interval = 0;
  std::optional<double> avg_participants;
  std::optional<double> avg_mrt;
  std::optional<double> avg_overall_trust;
  std::size_t campaigns = 0;
};

struct SuggestionRecord {
  std::uint32_t interval = 0;
  std::string requester;
  std::string participant;
  double implicit_trust = 0.0;
  std::uint64_t intermediate_count = 0;
};

/// Mean Route Trust: sum of route trusts divided by sum of route hop
/// counts; nullopt for an empty route set.
std::optional<double> compute_mrt(std::span<const Route> routes);

/// One strategy arm. Holds its own copy of the graph; fully reconstructible
/// from (initial graph, config, strategy). Draw streams are keyed by
/// (purpose, task, participant), so arms with the same config consume
/// identical randomness per task regardless of strategy.
class Simulation {
 public:
  Simulation(const TrustGraph& initial_graph, const SimConfig& cfg,
             StrategyKind strategy);

  CampaignResult run_campaign(const Task& task);

  /// Runs config.tasks_per_interval campaigns, then recomputes the
  /// reputation snapshot and (for the friend-suggestion strategy) builds
  /// and applies suggestion lists for every pool requester.
  IntervalMetrics run_interval();

  std::vector<IntervalMetrics> run_all();

  const TrustGraph& graph() const { return graph_; }
  const std::vector<NodeIndex>& requester_pool() const { return pool_; }
  const ImplicitTrustLedger& ledger() const { return ledger_; }
  const std::vector<SuggestionRecord>& suggestion_log() const {
    return suggestion_log_;
  }
  std::uint32_t interval_index() const { return interval_; }

 private:
  void snapshot_reputation();

  SimConfig cfg_;
  StrategyKind strategy_;
  TrustGraph graph_;
  ProfileTable profiles_;
  std::vector<NodeIndex> pool_;
  SocialFactorCache factors_;
  ImplicitTrustLedger ledger_;
  FuzzySystem fuzzy_;
  std::unordered_map<NodeIndex, double> reputation_;  // interval-start snapshot
  std::uint64_t next_task_ = 0;
  std::uint32_t interval_ = 0;
  std::vector<SuggestionRecord> suggestion_log_;
};

struct StrategySeries {
  StrategyKind strategy;
  std::vector<IntervalMetrics> intervals;
  std::vector<SuggestionRecord> suggestions;
};

/// Loads (or synthesizes) the graph, then runs every configured strategy on
/// a fresh copy with identical profiles, tasks, and draw streams.
std::vector<StrategySeries> run_simulation(const SimConfig& cfg);

/// The graph a simulation runs on: parsed from cfg.graph_path, or generated
/// from the fixture parameters when the path is "synthetic".
TrustGraph simulation_graph(const SimConfig& cfg);

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_SIMULATION_HPP
