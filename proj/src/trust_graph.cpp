#include "trustrecruit/trust_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trustrecruit {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (std::isspace(c) || c == '#') return false;
  }
  return true;
}

}  // namespace

RatingMapping RatingMapping::advogato() {
  RatingMapping m;
  m.levels = {{"master", 0.8}, {"journeyer", 0.6}, {"apprentice", 0.4}};
  return m;
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

NodeIndex TrustGraph::add_node(std::string_view id) {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  if (!valid_id(id)) fail("invalid node id: '" + std::string(id) + "'");
  NodeIndex n = static_cast<NodeIndex>(ids_.size());
  ids_.emplace_back(id);
  out_.emplace_back();
  in_.emplace_back();
  index_.emplace(std::string(id), n);
  return n;
}

NodeIndex TrustGraph::find(std::string_view id) const {
  auto it = index_.find(id);
  return it == index_.end() ? kInvalidNode : it->second;
}

const std::string& TrustGraph::id_of(NodeIndex n) const {
  if (!has_node(n)) fail("unknown node index");
  return ids_[n];
}

std::vector<TrustGraph::Edge>::iterator TrustGraph::locate(
    std::vector<Edge>& list, NodeIndex peer) {
  return std::lower_bound(list.begin(), list.end(), peer,
                          [this](const Edge& e, NodeIndex p) {
                            return id_less(e.peer, p);
                          });
}

std::vector<TrustGraph::Edge>::const_iterator TrustGraph::locate(
    const std::vector<Edge>& list, NodeIndex peer) const {
  return std::lower_bound(list.begin(), list.end(), peer,
                          [this](const Edge& e, NodeIndex p) {
                            return id_less(e.peer, p);
                          });
}

bool TrustGraph::has_edge(NodeIndex src, NodeIndex dst) const {
  if (!has_node(src) || !has_node(dst)) return false;
  auto it = locate(out_[src], dst);
  return it != out_[src].end() && it->peer == dst;
}

double TrustGraph::edge_trust(NodeIndex src, NodeIndex dst) const {
  if (!has_node(src) || !has_node(dst)) fail("unknown node");
  auto it = locate(out_[src], dst);
  if (it == out_[src].end() || it->peer != dst)
    fail("missing edge " + ids_[src] + " -> " + ids_[dst]);
  return it->trust;
}

void TrustGraph::add_edge(NodeIndex src, NodeIndex dst, double trust) {
  if (!has_node(src) || !has_node(dst)) fail("unknown node");
  if (src == dst) fail("self-loop edge on node " + ids_[src]);
  if (!(trust >= 0.0 && trust <= 1.0))
    fail("trust value out of range [0,1]: " + format_double(trust));
  auto it = locate(out_[src], dst);
  if (it != out_[src].end() && it->peer == dst)
    fail("duplicate edge " + ids_[src] + " -> " + ids_[dst]);
  out_[src].insert(it, Edge{dst, trust});
  auto rit = locate(in_[dst], src);
  in_[dst].insert(rit, Edge{src, trust});
  ++edge_count_;
}

double TrustGraph::adjust_edge_trust(NodeIndex src, NodeIndex dst, double delta) {
  if (!has_node(src) || !has_node(dst)) fail("unknown node");
  auto it = locate(out_[src], dst);
  if (it == out_[src].end() || it->peer != dst)
    fail("missing edge " + ids_[src] + " -> " + ids_[dst]);
  double v = std::clamp(it->trust + delta, 0.0, 1.0);
  it->trust = v;
  auto rit = locate(in_[dst], src);
  rit->trust = v;
  return v;
}

void TrustGraph::add_friendship(std::string_view src, std::string_view dst,
                                double initial_trust) {
  add_friendship(add_node(src), add_node(dst), initial_trust);
}

void TrustGraph::add_friendship(NodeIndex src, NodeIndex dst,
                                double initial_trust) {
  if (has_edge(src, dst))
    fail("friendship edge already exists: " + ids_[src] + " -> " + ids_[dst]);
  add_edge(src, dst, initial_trust);
}

std::span<const TrustGraph::Edge> TrustGraph::out_edges(NodeIndex n) const {
  if (!has_node(n)) fail("unknown node index");
  return out_[n];
}

std::span<const TrustGraph::Edge> TrustGraph::in_edges(NodeIndex n) const {
  if (!has_node(n)) fail("unknown node index");
  return in_[n];
}

std::vector<std::pair<NodeIndex, double>> TrustGraph::out_neighbors(
    NodeIndex n, bool traversable_only) const {
  if (!has_node(n)) fail("unknown node index");
  std::vector<std::pair<NodeIndex, double>> res;
  res.reserve(out_[n].size());
  for (const Edge& e : out_[n]) {
    if (traversable_only && e.trust <= 0.0) continue;
    res.emplace_back(e.peer, e.trust);
  }
  return res;
}

GraphStats TrustGraph::stats() const {
  GraphStats s;
  s.node_count = ids_.size();
  s.edge_count = edge_count_;
  for (const auto& edges : out_)
    for (const Edge& e : edges) ++s.rating_histogram[e.trust];
  return s;
}

std::vector<NodeIndex> TrustGraph::nodes_sorted() const {
  std::vector<NodeIndex> v(ids_.size());
  for (NodeIndex i = 0; i < v.size(); ++i) v[i] = i;
  std::sort(v.begin(), v.end(),
            [this](NodeIndex a, NodeIndex b) { return ids_[a] < ids_[b]; });
  return v;
}

TrustGraph parse_trust_graph(std::string_view text, const RatingMapping& mapping) {
  for (const auto& [token, value] : mapping.levels) {
    if (!(value >= 0.0 && value <= 1.0))
      fail("rating mapping value out of range for token '" + token + "'");
  }
  TrustGraph g;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) fields.push_back(line.substr(start, i - start));
    }
    if (fields.empty()) continue;
    if (fields[0].front() == '#') continue;
    if (fields.size() != 3)
      fail("line " + std::to_string(lineno) + ": expected 3 fields, got " +
           std::to_string(fields.size()));

    double trust;
    if (auto it = mapping.levels.find(fields[2]); it != mapping.levels.end()) {
      trust = it->second;
    } else {
      auto res = std::from_chars(fields[2].data(),
                                 fields[2].data() + fields[2].size(), trust);
      if (res.ec != std::errc{} || res.ptr != fields[2].data() + fields[2].size())
        fail("line " + std::to_string(lineno) + ": unknown rating token '" +
             std::string(fields[2]) + "'");
      if (!(trust >= 0.0 && trust <= 1.0))
        fail("line " + std::to_string(lineno) + ": rating outside [0,1]");
    }
    if (fields[0] == fields[1])
      fail("line " + std::to_string(lineno) + ": self-loop on '" +
           std::string(fields[0]) + "'");
    NodeIndex s = g.add_node(fields[0]);
    NodeIndex d = g.add_node(fields[1]);
    if (g.has_edge(s, d))
      fail("line " + std::to_string(lineno) + ": duplicate edge " +
           std::string(fields[0]) + " -> " + std::string(fields[1]));
    g.add_edge(s, d, trust);
  }
  return g;
}

std::string serialize_trust_graph(const TrustGraph& graph) {
  std::string out;
  for (NodeIndex n : graph.nodes_sorted()) {
    for (const auto& e : graph.out_edges(n)) {
      out += graph.id_of(n);
      out += ' ';
      out += graph.id_of(e.peer);
      out += ' ';
      out += format_double(e.trust);
      out += '\n';
    }
  }
  return out;
}

TrustGraph load_trust_graph(const std::string& path, const RatingMapping& mapping) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_trust_graph(ss.str(), mapping);
}

}  // namespace trustrecruit
