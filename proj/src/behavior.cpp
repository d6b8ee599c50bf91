#include "trustrecruit/behavior.hpp"

#include <algorithm>
#include <stdexcept>

namespace trustrecruit {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

ProfileTable generate_profiles(const TrustGraph& graph, const SimConfig& cfg,
                               std::uint64_t seed) {
  ProfileTable table(graph.node_count());
  for (NodeIndex n = 0; n < graph.node_count(); ++n) {
    SplitMix64 rng =
        substream(seed, Stream::Profiles, fnv1a64(graph.id_of(n)));
    ParticipantProfile& p = table[n];
    p.expertise.resize(cfg.topics);
    for (auto& e : p.expertise) e = rng.next_double();
    p.locality.resize(cfg.regions);
    for (auto& l : p.locality) l = rng.next_double();
    p.timeliness = rng.uniform(0.5, 1.0);
    p.latent_quality = rng.uniform(0.2, 1.0);
  }
  return table;
}

std::vector<NodeIndex> pick_requester_pool(const TrustGraph& graph,
                                           const SimConfig& cfg,
                                           std::uint64_t seed) {
  std::vector<NodeIndex> candidates;
  for (NodeIndex n : graph.nodes_sorted()) {
    for (const auto& e : graph.out_edges(n)) {
      if (e.trust > 0.0) {
        candidates.push_back(n);
        break;
      }
    }
  }
  if (candidates.empty())
    throw std::runtime_error("no nodes with traversable out-edges; cannot form requester pool");
  SplitMix64 rng = substream(seed, Stream::RequesterPool);
  std::size_t want = std::min<std::size_t>(cfg.num_requesters, candidates.size());
  // Partial Fisher-Yates over the lexicographically sorted candidate list.
  for (std::size_t i = 0; i < want; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.next_below(candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(want);
  return candidates;
}

Task generate_task(std::uint64_t task_index, std::uint32_t interval,
                   const std::vector<NodeIndex>& pool, const SimConfig& cfg,
                   std::uint64_t seed) {
  if (pool.empty()) throw std::runtime_error("requester pool is empty");
  SplitMix64 rng = substream(seed, Stream::Tasks, task_index);
  Task t;
  t.id = task_index;
  t.interval = interval;
  t.requester = pool[rng.next_below(pool.size())];
  t.region = static_cast<std::uint32_t>(rng.next_below(cfg.regions));
  t.topic = static_cast<std::uint32_t>(rng.next_below(cfg.topics));
  t.locality_threshold = cfg.locality_threshold;
  t.expertise_threshold = cfg.expertise_threshold;
  return t;
}

SplitMix64 contribution_stream(std::uint64_t seed, std::uint64_t task_id,
                               std::string_view participant_id) {
  return substream(seed, Stream::Contributions, task_id, fnv1a64(participant_id));
}

ContributionDraw sample_contribution(const ParticipantProfile& profile,
                                     SplitMix64& rng, const SimConfig& cfg) {
  ContributionDraw d;
  d.responded = rng.next_double() < cfg.p_respond;
  d.qoc = clamp01(rng.normal(profile.latent_quality, cfg.sigma_qoc));
  return d;
}

double sample_requester_evaluation(double qoc, SplitMix64& rng,
                                   const SimConfig& cfg) {
  return clamp01(rng.normal(qoc, cfg.sigma_re));
}

SocialFactors SocialFactorCache::get(NodeIndex requester, NodeIndex participant) {
  std::uint64_t key =
      (static_cast<std::uint64_t>(requester) << 32) | participant;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!graph_->has_node(requester) || !graph_->has_node(participant))
    throw std::runtime_error("social factors requested for unknown node");
  SplitMix64 rng = substream(seed_, Stream::Factors,
                             fnv1a64(graph_->id_of(requester)),
                             fnv1a64(graph_->id_of(participant)));
  SocialFactors f{rng.next_double(), rng.next_double()};
  memo_.emplace(key, f);
  return f;
}

}  // namespace trustrecruit
