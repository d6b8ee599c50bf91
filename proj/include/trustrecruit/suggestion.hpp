#ifndef TRUSTRECRUIT_SUGGESTION_HPP
#define TRUSTRECRUIT_SUGGESTION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "trustrecruit/recruitment.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

struct SuggestionEntry {
  NodeIndex participant = kInvalidNode;
  double implicit_trust = 0.0;
  std::uint64_t intermediate_count = 0;
  std::vector<NodeIndex> via;  // interior nodes of the last best route
};

struct SuggestionList {
  NodeIndex requester = kInvalidNode;
  std::vector<SuggestionEntry> entries;
};

/// Per-(requester, participant) implicit-trust bookkeeping plus
/// per-requester counts of how often each node served as a route
/// intermediate. Pairs whose suggestion has been applied are retired and
/// never re-listed.
class ImplicitTrustLedger {
 public:
  /// Accumulates gamma = |toc - rho_req*re| into the pair's implicit trust
  /// (+gamma above th1, -gamma below th2, clamped to [0,1]; first touch
  /// starts from 0). The participant must not be an immediate friend of the
  /// requester. Returns the new value.
  double record_implicit(const TrustGraph& graph, NodeIndex requester,
                         NodeIndex participant, double toc, double rho_req,
                         double re, double th1, double th2,
                         const Route& route);

  /// Increments the requester's intermediate count for every interior node
  /// of the route.
  void record_intermediates(NodeIndex requester, const Route& route);

  /// Entries with implicit trust strictly above `eligibility`, excluding
  /// current immediate friends and retired pairs, sorted by
  /// (intermediate_count desc, implicit_trust desc, participant id asc) and
  /// truncated to max_len. Pure: does not modify the ledger.
  SuggestionList build_suggestion_list(const TrustGraph& graph,
                                       NodeIndex requester,
                                       std::size_t max_len,
                                       double eligibility) const;

  /// Establishes one friendship per entry (initial trust = implicit trust)
  /// unless the edge appeared meanwhile; applied pairs are retired.
  /// Returns the number of edges added.
  std::size_t apply_suggestions(TrustGraph& graph, const SuggestionList& list);

  double implicit_trust(NodeIndex requester, NodeIndex participant) const;
  std::uint64_t intermediate_count(NodeIndex requester, NodeIndex node) const;
  bool retired(NodeIndex requester, NodeIndex participant) const;

 private:
  struct PairState {
    double implicit_trust = 0.0;
    bool retired = false;
    std::vector<NodeIndex> last_via;
  };
  using PairKey = std::pair<NodeIndex, NodeIndex>;

  std::map<PairKey, PairState> pairs_;
  std::map<NodeIndex, std::map<NodeIndex, std::uint64_t>> intermediates_;
};

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_SUGGESTION_HPP
