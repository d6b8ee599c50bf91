#ifndef TRUSTRECRUIT_RECRUITMENT_HPP
#define TRUSTRECRUIT_RECRUITMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trustrecruit/behavior.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

/// Simple path from requester to participant with multiplicative trust.
struct Route {
  std::vector<NodeIndex> nodes;  // first = requester, last = participant
  double trust = 0.0;            // product of edge weights along the path
  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// Product of edge weights; the multiplicative trust propagation rule.
/// Throws on an empty list.
double route_trust(std::span<const double> weights);

/// All nodes other than the requester reachable within `max_hops`
/// traversable (trust > 0) edges whose profile meets both task thresholds
/// (>= counts as suitable). Result in lexicographic id order.
std::vector<NodeIndex> select_participants(const TrustGraph& graph,
                                           const ProfileTable& profiles,
                                           const Task& task,
                                           std::uint32_t max_hops);

/// Most trustable route from src to dst within max_hops.
///  - a direct traversable edge wins regardless of alternatives;
///  - otherwise the maximum-product simple path, ties broken by shorter
///    length then lexicographically smallest node sequence;
///  - nullopt when unreachable.
std::optional<Route> best_route(const TrustGraph& graph, NodeIndex src,
                                NodeIndex dst, std::uint32_t max_hops);

/// Exhaustive enumeration of all simple paths src -> dst over traversable
/// edges with at most max_hops edges, in lexicographic order of the node
/// sequence. Serves as the independent oracle for best_route.
std::vector<Route> enumerate_routes(const TrustGraph& graph, NodeIndex src,
                                    NodeIndex dst, std::uint32_t max_hops);

struct SelectionResult {
  std::uint64_t task_id = 0;
  // (participant, route) sorted by participant id; every route starts at
  // the task's requester. Participants with no trust-positive route within
  // the hop limit are dropped.
  std::vector<std::pair<NodeIndex, Route>> routes;
};

/// Composition of select_participants and best-route search (one
/// hop-indexed DP pass answers all participants).
SelectionResult recruit(const TrustGraph& graph, const ProfileTable& profiles,
                        const Task& task, std::uint32_t max_hops);

/// Hop-indexed dynamic program: best product over walks from src using
/// exactly k edges, k = 1..max_hops, with predecessor reconstruction.
/// Because weights lie in [0,1], the best <=L-hop walk value equals the best
/// simple-path value, and reconstructing at the smallest optimal k yields a
/// simple path. Reusable across queries to amortize buffer allocation;
/// read-only on the graph.
class RouteSearch {
 public:
  explicit RouteSearch(const TrustGraph& graph);

  /// Runs the DP from src. Invalidated by graph mutation.
  void run(NodeIndex src, std::uint32_t max_hops);

  /// Route for one destination under the direct-edge rule and tie-breaks.
  std::optional<Route> route_to(NodeIndex dst) const;

 private:
  std::vector<NodeIndex> walk_to(std::uint32_t k, NodeIndex v) const;
  bool id_seq_less(const std::vector<NodeIndex>& a,
                   const std::vector<NodeIndex>& b) const;

  const TrustGraph* graph_;
  NodeIndex src_ = kInvalidNode;
  std::uint32_t hops_ = 0;
  // level-major tables: value_[k * n + v], pred_[k * n + v]
  std::vector<double> value_;
  std::vector<NodeIndex> pred_;
  std::vector<NodeIndex> frontier_;
};

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_RECRUITMENT_HPP
