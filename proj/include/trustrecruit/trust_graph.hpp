#ifndef TRUSTRECRUIT_TRUST_GRAPH_HPP
#define TRUSTRECRUIT_TRUST_GRAPH_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trustrecruit {

using NodeIndex = std::uint32_t;
inline constexpr NodeIndex kInvalidNode = static_cast<NodeIndex>(-1);

/// Mapping from textual rating tokens to trust values in [0,1].
struct RatingMapping {
  std::map<std::string, double, std::less<>> levels;

  /// master=0.8, journeyer=0.6, apprentice=0.4.
  static RatingMapping advogato();
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<double, std::size_t> rating_histogram;
};

/// Directed trust graph. Node identifiers are opaque strings; all ordering
/// (neighbor iteration, serialization) is lexicographic on the identifier so
/// traversals are reproducible across runs. Edge weights stay in [0,1] at all
/// times; self loops and parallel edges are rejected. Weight-zero edges are
/// kept (history) but treated as non-traversable by routing and selection.
class TrustGraph {
 public:
  struct Edge {
    NodeIndex peer;
    double trust;
  };

  /// Returns the index for `id`, creating the node if it does not exist.
  /// Identifiers must be non-empty and free of whitespace and '#'.
  NodeIndex add_node(std::string_view id);

  /// kInvalidNode when absent.
  NodeIndex find(std::string_view id) const;

  const std::string& id_of(NodeIndex n) const;

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_node(NodeIndex n) const { return n < ids_.size(); }
  bool has_edge(NodeIndex src, NodeIndex dst) const;

  /// Trust of an existing edge; throws if the edge is missing.
  double edge_trust(NodeIndex src, NodeIndex dst) const;

  /// Inserts a new edge. Throws on self-loop, duplicate, or weight
  /// outside [0,1].
  void add_edge(NodeIndex src, NodeIndex dst, double trust);

  /// Applies an additive change to an existing edge, clamping the result
  /// to [0,1]. Returns the new trust value. Throws if the edge is missing.
  double adjust_edge_trust(NodeIndex src, NodeIndex dst, double delta);

  /// Establishes a friendship edge with the given initial trust. The edge
  /// must not already exist. Endpoints are created on demand, mirroring
  /// edge-list semantics.
  void add_friendship(std::string_view src, std::string_view dst,
                      double initial_trust);
  void add_friendship(NodeIndex src, NodeIndex dst, double initial_trust);

  /// Out-edges sorted lexicographically by destination id. Includes
  /// weight-zero edges.
  std::span<const Edge> out_edges(NodeIndex n) const;

  /// In-edges sorted lexicographically by source id.
  std::span<const Edge> in_edges(NodeIndex n) const;

  /// Neighbors in ascending (lexicographic) id order. With
  /// `traversable_only` (the routing rule) edges with trust == 0 are
  /// dropped. Throws on unknown node.
  std::vector<std::pair<NodeIndex, double>> out_neighbors(
      NodeIndex n, bool traversable_only = true) const;

  GraphStats stats() const;

  /// All node indices in lexicographic id order.
  std::vector<NodeIndex> nodes_sorted() const;

 private:
  struct IdHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  bool id_less(NodeIndex a, NodeIndex b) const { return ids_[a] < ids_[b]; }
  std::vector<Edge>::iterator locate(std::vector<Edge>& list, NodeIndex peer);
  std::vector<Edge>::const_iterator locate(const std::vector<Edge>& list,
                                           NodeIndex peer) const;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, NodeIndex, IdHash, std::equal_to<>> index_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::size_t edge_count_ = 0;
};

/// Parses an edge-list: one `source target rating` triple per line, fields
/// separated by a tab or spaces; rating is a mapping token or a decimal in
/// [0,1]; blank lines and lines starting with '#' are ignored. Duplicate
/// edges and self-loops are hard errors.
TrustGraph parse_trust_graph(std::string_view text, const RatingMapping& mapping);

/// Emits the same edge-list format with decimal ratings (shortest
/// round-trippable form), edges sorted by (source, target).
std::string serialize_trust_graph(const TrustGraph& graph);

TrustGraph load_trust_graph(const std::string& path, const RatingMapping& mapping);

/// Shortest decimal string that round-trips the double (std::to_chars).
std::string format_double(double v);

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_TRUST_GRAPH_HPP
