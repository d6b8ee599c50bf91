#include "trustrecruit/simulation.hpp"

#include <algorithm>

#include "trustrecruit/fixture.hpp"

namespace trustrecruit {

std::optional<double> compute_mrt(std::span<const Route> routes) {
  if (routes.empty()) return std::nullopt;
  double trust_sum = 0.0;
  std::size_t hop_sum = 0;
  for (const Route& r : routes) {
    trust_sum += r.trust;
    hop_sum += r.length();
  }
  return trust_sum / static_cast<double>(hop_sum);
}

Simulation::Simulation(const TrustGraph& initial_graph, const SimConfig& cfg,
                       StrategyKind strategy)
    : cfg_(cfg),
      strategy_(strategy),
      graph_(initial_graph),
      profiles_(generate_profiles(graph_, cfg, cfg.seed)),
      pool_(pick_requester_pool(graph_, cfg, cfg.seed)),
      factors_(graph_, cfg.seed),
      fuzzy_(FuzzySystem::from_config(cfg)) {
  snapshot_reputation();
}

void Simulation::snapshot_reputation() {
  reputation_.clear();
  for (NodeIndex q : pool_) reputation_[q] = compute_reputation(graph_, q);
}

CampaignResult Simulation::run_campaign(const Task& task) {
  CampaignResult result;
  result.task_id = task.id;

  // Selection. The one-hop baseline broadcasts to every immediate friend
  // with no suitability filter; both multi-hop strategies pre-select.
  std::vector<std::pair<NodeIndex, Route>> routes;
  if (strategy_ == StrategyKind::OneHop) {
    for (const auto& [peer, trust] : graph_.out_neighbors(task.requester)) {
      routes.emplace_back(peer, Route{{task.requester, peer}, trust});
    }
  } else {
    routes = recruit(graph_, profiles_, task, cfg_.hop_limit).routes;
  }

  result.routes.reserve(routes.size());
  for (const auto& [participant, route] : routes) result.routes.push_back(route);

  const double rho_req = reputation_.count(task.requester)
                             ? reputation_.at(task.requester)
                             : compute_reputation(graph_, task.requester);

  std::vector<double> tocs;
  for (const auto& [participant, route] : routes) {
    // Suggestion statistics cover every selected route, not only the
    // responding participants.
    if (strategy_ == StrategyKind::MultiHopFS)
      ledger_.record_intermediates(task.requester, route);

    SplitMix64 draw_rng =
        contribution_stream(cfg_.seed, task.id, graph_.id_of(participant));
    ContributionDraw draw =
        sample_contribution(profiles_[participant], draw_rng, cfg_);
    double re = sample_requester_evaluation(draw.qoc, draw_rng, cfg_);
    if (!draw.responded) continue;

    ++result.recruited;
    Contribution c;
    c.task_id = task.id;
    c.participant = participant;
    c.route = route;
    c.qoc = draw.qoc;
    c.re = re;

    // Social factors only exist for actual friendships; a participant with
    // no direct edge from the requester contributes them as zero.
    SocialFactors factors{};
    const bool immediate_friend = graph_.has_edge(task.requester, participant);
    if (immediate_friend) factors = factors_.get(task.requester, participant);

    c.top = evaluate_top(profiles_[participant], task, factors,
                         std::span<const double, 5>(cfg_.top_weights));
    c.top_effective = effective_top(c.top, route.trust);
    c.toc = fuzzy_toc(c.qoc, c.top_effective, fuzzy_);
    c.revoked = c.toc < cfg_.revocation;
    tocs.push_back(c.toc);

    apply_trust_update(graph_, route, c.toc, rho_req, c.re, cfg_.th1, cfg_.th2);

    if (strategy_ == StrategyKind::MultiHopFS && !immediate_friend &&
        !ledger_.retired(task.requester, participant)) {
      ledger_.record_implicit(graph_, task.requester, participant, c.toc,
                              rho_req, c.re, cfg_.th1, cfg_.th2, route);
    }

    result.contributions.push_back(std::move(c));
  }

  result.overall_trust = overall_trust(tocs, cfg_.revocation);
  result.mrt = compute_mrt(result.routes);
  return result;
}

IntervalMetrics Simulation::run_interval() {
  IntervalMetrics m;
  m.interval = interval_;
  m.campaigns = cfg_.tasks_per_interval;

  double participants_sum = 0.0;
  double mrt_sum = 0.0;
  std::size_t mrt_n = 0;
  double trust_sum = 0.0;
  std::size_t trust_n = 0;

  for (std::uint32_t i = 0; i < cfg_.tasks_per_interval; ++i) {
    Task task = generate_task(next_task_++, interval_, pool_, cfg_, cfg_.seed);
    CampaignResult r = run_campaign(task);
    participants_sum += static_cast<double>(r.recruited);
    if (r.mrt) {
      mrt_sum += *r.mrt;
      ++mrt_n;
    }
    if (r.overall_trust) {
      trust_sum += *r.overall_trust;
      ++trust_n;
    }
  }

  if (m.campaigns > 0)
    m.avg_participants = participants_sum / static_cast<double>(m.campaigns);
  if (mrt_n > 0) m.avg_mrt = mrt_sum / static_cast<double>(mrt_n);
  if (trust_n > 0)
    m.avg_overall_trust = trust_sum / static_cast<double>(trust_n);

  // Interval boundary: refresh the reputation snapshot, then run the
  // suggestion pass for the friend-suggestion strategy.
  snapshot_reputation();
  if (strategy_ == StrategyKind::MultiHopFS) {
    for (NodeIndex q : pool_) {
      SuggestionList list = ledger_.build_suggestion_list(
          graph_, q, cfg_.suggestion_max, cfg_.eligibility);
      for (const SuggestionEntry& e : list.entries) {
        suggestion_log_.push_back(SuggestionRecord{
            interval_, graph_.id_of(q), graph_.id_of(e.participant),
            e.implicit_trust, e.intermediate_count});
      }
      ledger_.apply_suggestions(graph_, list);
    }
  }

  ++interval_;
  return m;
}

std::vector<IntervalMetrics> Simulation::run_all() {
  std::vector<IntervalMetrics> out;
  out.reserve(cfg_.intervals);
  for (std::uint32_t i = 0; i < cfg_.intervals; ++i)
    out.push_back(run_interval());
  return out;
}

TrustGraph simulation_graph(const SimConfig& cfg) {
  if (cfg.graph_path == "synthetic") {
    std::string text =
        generate_fixture(cfg.fixture_seed, cfg.fixture_nodes,
                         cfg.fixture_edges, cfg.fixture_histogram);
    return parse_trust_graph(text, RatingMapping::advogato());
  }
  return load_trust_graph(cfg.graph_path, RatingMapping::advogato());
}

std::vector<StrategySeries> run_simulation(const SimConfig& cfg) {
  validate_config(cfg);
  TrustGraph initial = simulation_graph(cfg);
  std::vector<StrategySeries> out;
  for (StrategyKind s : cfg.strategies) {
    Simulation arm(initial, cfg, s);
    StrategySeries series;
    series.strategy = s;
    series.intervals = arm.run_all();
    series.suggestions = arm.suggestion_log();
    out.push_back(std::move(series));
  }
  return out;
}

}  // namespace trustrecruit
