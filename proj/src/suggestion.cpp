#include "trustrecruit/suggestion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trustrecruit {

double ImplicitTrustLedger::record_implicit(const TrustGraph& graph,
                                            NodeIndex requester,
                                            NodeIndex participant, double toc,
                                            double rho_req, double re,
                                            double th1, double th2,
                                            const Route& route) {
  if (graph.has_edge(requester, participant))
    throw std::runtime_error(
        "record_implicit called for an immediate friend: " +
        graph.id_of(requester) + " -> " + graph.id_of(participant));
  PairState& state = pairs_[{requester, participant}];
  const double gamma = std::abs(toc - rho_req * re);
  if (toc > th1)
    state.implicit_trust = std::clamp(state.implicit_trust + gamma, 0.0, 1.0);
  else if (toc < th2)
    state.implicit_trust = std::clamp(state.implicit_trust - gamma, 0.0, 1.0);
  if (route.nodes.size() >= 2)
    state.last_via.assign(route.nodes.begin() + 1, route.nodes.end() - 1);
  return state.implicit_trust;
}

void ImplicitTrustLedger::record_intermediates(NodeIndex requester,
                                               const Route& route) {
  if (route.nodes.size() < 3) return;  // 1-hop routes have no interior nodes
  auto& counts = intermediates_[requester];
  for (std::size_t i = 1; i + 1 < route.nodes.size(); ++i)
    ++counts[route.nodes[i]];
}

SuggestionList ImplicitTrustLedger::build_suggestion_list(
    const TrustGraph& graph, NodeIndex requester, std::size_t max_len,
    double eligibility) const {
  SuggestionList list;
  list.requester = requester;
  auto counts_it = intermediates_.find(requester);
  auto count_of = [&](NodeIndex n) -> std::uint64_t {
    if (counts_it == intermediates_.end()) return 0;
    auto it = counts_it->second.find(n);
    return it == counts_it->second.end() ? 0 : it->second;
  };

  for (auto it = pairs_.lower_bound({requester, 0}); it != pairs_.end(); ++it) {
    if (it->first.first != requester) break;
    const PairState& state = it->second;
    if (state.retired) continue;
    if (state.implicit_trust <= eligibility) continue;
    NodeIndex participant = it->first.second;
    if (graph.has_edge(requester, participant)) continue;
    SuggestionEntry e;
    e.participant = participant;
    e.implicit_trust = state.implicit_trust;
    e.intermediate_count = count_of(participant);
    e.via = state.last_via;
    list.entries.push_back(std::move(e));
  }

  std::sort(list.entries.begin(), list.entries.end(),
            [&graph](const SuggestionEntry& a, const SuggestionEntry& b) {
              if (a.intermediate_count != b.intermediate_count)
                return a.intermediate_count > b.intermediate_count;
              if (a.implicit_trust != b.implicit_trust)
                return a.implicit_trust > b.implicit_trust;
              return graph.id_of(a.participant) < graph.id_of(b.participant);
            });
  if (list.entries.size() > max_len) list.entries.resize(max_len);
  return list;
}

std::size_t ImplicitTrustLedger::apply_suggestions(TrustGraph& graph,
                                                   const SuggestionList& list) {
  std::size_t added = 0;
  for (const SuggestionEntry& e : list.entries) {
    if (!graph.has_edge(list.requester, e.participant)) {
      graph.add_friendship(list.requester, e.participant, e.implicit_trust);
      ++added;
    }
    auto it = pairs_.find({list.requester, e.participant});
    if (it != pairs_.end()) it->second.retired = true;
  }
  return added;
}

double ImplicitTrustLedger::implicit_trust(NodeIndex requester,
                                           NodeIndex participant) const {
  auto it = pairs_.find({requester, participant});
  return it == pairs_.end() ? 0.0 : it->second.implicit_trust;
}

std::uint64_t ImplicitTrustLedger::intermediate_count(NodeIndex requester,
                                                      NodeIndex node) const {
  auto it = intermediates_.find(requester);
  if (it == intermediates_.end()) return 0;
  auto jt = it->second.find(node);
  return jt == it->second.end() ? 0 : jt->second;
}

bool ImplicitTrustLedger::retired(NodeIndex requester,
                                  NodeIndex participant) const {
  auto it = pairs_.find({requester, participant});
  return it != pairs_.end() && it->second.retired;
}

}  // namespace trustrecruit
