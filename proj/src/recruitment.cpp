#include "trustrecruit/recruitment.hpp"

#include <algorithm>
#include <stdexcept>

namespace trustrecruit {

double route_trust(std::span<const double> weights) {
  if (weights.empty())
    throw std::invalid_argument("route_trust: empty weight list");
  double p = 1.0;
  for (double w : weights) {
    if (!(w >= 0.0 && w <= 1.0))
      throw std::invalid_argument("route_trust: weight outside [0,1]");
    p *= w;
  }
  return p;
}

std::vector<NodeIndex> select_participants(const TrustGraph& graph,
                                           const ProfileTable& profiles,
                                           const Task& task,
                                           std::uint32_t max_hops) {
  if (!graph.has_node(task.requester))
    throw std::runtime_error("select_participants: unknown requester");
  if (max_hops < 1)
    throw std::invalid_argument("select_participants: hop limit must be >= 1");

  std::vector<char> seen(graph.node_count(), 0);
  seen[task.requester] = 1;
  std::vector<NodeIndex> frontier{task.requester};
  std::vector<NodeIndex> reached;
  for (std::uint32_t depth = 0; depth < max_hops && !frontier.empty(); ++depth) {
    std::vector<NodeIndex> next;
    for (NodeIndex u : frontier) {
      for (const auto& e : graph.out_edges(u)) {
        if (e.trust <= 0.0 || seen[e.peer]) continue;
        seen[e.peer] = 1;
        next.push_back(e.peer);
        reached.push_back(e.peer);
      }
    }
    frontier = std::move(next);
  }

  std::vector<NodeIndex> suitable;
  for (NodeIndex n : reached) {
    const ParticipantProfile& p = profiles[n];
    if (p.locality[task.region] >= task.locality_threshold &&
        p.expertise[task.topic] >= task.expertise_threshold)
      suitable.push_back(n);
  }
  std::sort(suitable.begin(), suitable.end(),
            [&graph](NodeIndex a, NodeIndex b) {
              return graph.id_of(a) < graph.id_of(b);
            });
  return suitable;
}

RouteSearch::RouteSearch(const TrustGraph& graph) : graph_(&graph) {}

void RouteSearch::run(NodeIndex src, std::uint32_t max_hops) {
  if (!graph_->has_node(src)) throw std::runtime_error("RouteSearch: unknown source");
  if (max_hops < 1) throw std::invalid_argument("RouteSearch: hop limit must be >= 1");
  src_ = src;
  hops_ = max_hops;
  const std::size_t n = graph_->node_count();
  value_.assign(static_cast<std::size_t>(max_hops + 1) * n, 0.0);
  pred_.assign(static_cast<std::size_t>(max_hops + 1) * n, kInvalidNode);
  value_[src] = 1.0;

  frontier_.assign(1, src);
  std::vector<NodeIndex> next;
  for (std::uint32_t k = 1; k <= max_hops; ++k) {
    next.clear();
    const double* prev_val = value_.data() + static_cast<std::size_t>(k - 1) * n;
    double* cur_val = value_.data() + static_cast<std::size_t>(k) * n;
    NodeIndex* cur_pred = pred_.data() + static_cast<std::size_t>(k) * n;
    for (NodeIndex u : frontier_) {
      const double base = prev_val[u];
      for (const auto& e : graph_->out_edges(u)) {
        if (e.trust <= 0.0) continue;
        const double cand = base * e.trust;
        if (cand > cur_val[e.peer]) {
          if (cur_val[e.peer] == 0.0) next.push_back(e.peer);
          cur_val[e.peer] = cand;
          cur_pred[e.peer] = u;
        } else if (cand == cur_val[e.peer] && cand > 0.0 &&
                   cur_pred[e.peer] != u) {
          // Equal product: keep the lexicographically smaller node sequence.
          std::vector<NodeIndex> challenger = walk_to(k - 1, u);
          challenger.push_back(e.peer);
          if (id_seq_less(challenger, walk_to(k, e.peer)))
            cur_pred[e.peer] = u;
        }
      }
    }
    frontier_ = next;
  }
}

std::vector<NodeIndex> RouteSearch::walk_to(std::uint32_t k, NodeIndex v) const {
  std::vector<NodeIndex> path(k + 1);
  const std::size_t n = graph_->node_count();
  NodeIndex cur = v;
  for (std::uint32_t i = k; i > 0; --i) {
    path[i] = cur;
    cur = pred_[static_cast<std::size_t>(i) * n + cur];
  }
  path[0] = cur;
  return path;
}

bool RouteSearch::id_seq_less(const std::vector<NodeIndex>& a,
                              const std::vector<NodeIndex>& b) const {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [this](NodeIndex x, NodeIndex y) {
        return graph_->id_of(x) < graph_->id_of(y);
      });
}

std::optional<Route> RouteSearch::route_to(NodeIndex dst) const {
  if (dst == src_) return std::nullopt;
  if (graph_->has_edge(src_, dst)) {
    double w = graph_->edge_trust(src_, dst);
    if (w > 0.0) return Route{{src_, dst}, w};
  }
  const std::size_t n = graph_->node_count();
  double best = 0.0;
  std::uint32_t best_k = 0;
  for (std::uint32_t k = 1; k <= hops_; ++k) {
    double v = value_[static_cast<std::size_t>(k) * n + dst];
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  if (best <= 0.0) return std::nullopt;
  return Route{walk_to(best_k, dst), best};
}

std::optional<Route> best_route(const TrustGraph& graph, NodeIndex src,
                                NodeIndex dst, std::uint32_t max_hops) {
  if (!graph.has_node(src) || !graph.has_node(dst))
    throw std::runtime_error("best_route: unknown node");
  if (src == dst) throw std::invalid_argument("best_route: src == dst");
  RouteSearch search(graph);
  search.run(src, max_hops);
  return search.route_to(dst);
}

namespace {

void dfs_routes(const TrustGraph& graph, NodeIndex dst, std::uint32_t max_hops,
                std::vector<NodeIndex>& path, std::vector<char>& on_path,
                double product, std::vector<Route>& out) {
  NodeIndex u = path.back();
  if (path.size() > max_hops) return;
  for (const auto& e : graph.out_edges(u)) {
    if (e.trust <= 0.0 || on_path[e.peer]) continue;
    double p = product * e.trust;
    path.push_back(e.peer);
    if (e.peer == dst) {
      out.push_back(Route{path, p});
    } else {
      on_path[e.peer] = 1;
      dfs_routes(graph, dst, max_hops, path, on_path, p, out);
      on_path[e.peer] = 0;
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<Route> enumerate_routes(const TrustGraph& graph, NodeIndex src,
                                    NodeIndex dst, std::uint32_t max_hops) {
  if (!graph.has_node(src) || !graph.has_node(dst))
    throw std::runtime_error("enumerate_routes: unknown node");
  if (src == dst) throw std::invalid_argument("enumerate_routes: src == dst");
  std::vector<Route> out;
  std::vector<NodeIndex> path{src};
  std::vector<char> on_path(graph.node_count(), 0);
  on_path[src] = 1;
  dfs_routes(graph, dst, max_hops, path, on_path, 1.0, out);
  return out;
}

SelectionResult recruit(const TrustGraph& graph, const ProfileTable& profiles,
                        const Task& task, std::uint32_t max_hops) {
  SelectionResult result;
  result.task_id = task.id;
  std::vector<NodeIndex> suitable =
      select_participants(graph, profiles, task, max_hops);
  if (suitable.empty()) return result;
  RouteSearch search(graph);
  search.run(task.requester, max_hops);
  for (NodeIndex p : suitable) {
    if (auto route = search.route_to(p))
      result.routes.emplace_back(p, std::move(*route));
  }
  return result;
}

}  // namespace trustrecruit
