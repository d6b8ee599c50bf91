#ifndef TRUSTRECRUIT_BEHAVIOR_HPP
#define TRUSTRECRUIT_BEHAVIOR_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "trustrecruit/config.hpp"
#include "trustrecruit/rng.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

/// Synthetic per-node attributes, fixed for the lifetime of a run.
/// Expertise and locality entries ~ U(0,1); timeliness ~ U(0.5,1);
/// latent quality ~ U(0.2,1). All components stay in [0,1].
struct ParticipantProfile {
  std::vector<double> expertise;  // indexed by topic
  std::vector<double> locality;   // indexed by region
  double timeliness = 0.0;
  double latent_quality = 0.0;
};

struct Task {
  std::uint64_t id = 0;
  NodeIndex requester = kInvalidNode;
  std::uint32_t region = 0;
  std::uint32_t topic = 0;
  double locality_threshold = 0.5;
  double expertise_threshold = 0.5;
  std::uint32_t interval = 0;
};

struct SocialFactors {
  double friendship_duration = 0.0;
  double interaction_timegap = 0.0;
};

struct ContributionDraw {
  double qoc = 0.0;
  bool responded = false;
};

using ProfileTable = std::vector<ParticipantProfile>;  // indexed by NodeIndex

/// One profile per graph node, keyed by node id so the table is identical
/// for a given seed regardless of node insertion order.
ProfileTable generate_profiles(const TrustGraph& graph, const SimConfig& cfg,
                               std::uint64_t seed);

/// The fixed requester pool: num_requesters distinct nodes with at least one
/// traversable out-edge, sampled once per run. Deterministic per seed.
std::vector<NodeIndex> pick_requester_pool(const TrustGraph& graph,
                                           const SimConfig& cfg,
                                           std::uint64_t seed);

/// Task for a given global index. Requester uniform over the pool, region
/// and topic uniform over their ranges, thresholds from config. Keyed by
/// task index so task streams are identical across strategy arms.
Task generate_task(std::uint64_t task_index, std::uint32_t interval,
                   const std::vector<NodeIndex>& pool, const SimConfig& cfg,
                   std::uint64_t seed);

/// Per-(task, participant) generator for response/quality/evaluation draws.
/// Keying by both ids makes the draws independent of which other
/// participants were selected, so strategies see identical behavior for the
/// same (task, participant) pair.
SplitMix64 contribution_stream(std::uint64_t seed, std::uint64_t task_id,
                               std::string_view participant_id);

/// responded ~ Bernoulli(p_respond); qoc = clamp(N(latent_quality, sigma_qoc)).
/// Consumes one uniform then one normal from `rng`, in that order.
ContributionDraw sample_contribution(const ParticipantProfile& profile,
                                     SplitMix64& rng, const SimConfig& cfg);

/// RE = clamp(N(qoc, sigma_re), 0, 1).
double sample_requester_evaluation(double qoc, SplitMix64& rng,
                                   const SimConfig& cfg);

/// Lazily sampled U(0,1) factors per ordered (requester, participant) pair,
/// memoized within a run. (a,b) and (b,a) are independent.
class SocialFactorCache {
 public:
  SocialFactorCache(const TrustGraph& graph, std::uint64_t seed)
      : graph_(&graph), seed_(seed) {}

  SocialFactors get(NodeIndex requester, NodeIndex participant);

 private:
  const TrustGraph* graph_;
  std::uint64_t seed_;
  std::unordered_map<std::uint64_t, SocialFactors> memo_;
};

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_BEHAVIOR_HPP
