#include "trustrecruit/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "trustrecruit/rng.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

namespace {

std::string node_name(std::uint32_t i) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "u%05u", i);
  return buf;
}

}  // namespace

std::string generate_fixture(std::uint64_t seed, std::uint32_t node_count,
                             std::uint32_t edge_count,
                             const std::map<double, std::size_t>& histogram) {
  std::size_t hist_sum = 0;
  for (const auto& [rating, count] : histogram) {
    if (!(rating >= 0.0 && rating <= 1.0))
      throw std::invalid_argument("fixture histogram rating outside [0,1]");
    hist_sum += count;
  }
  if (hist_sum != edge_count)
    throw std::invalid_argument("fixture histogram does not sum to edge_count");
  if (node_count < 2 && edge_count > 0)
    throw std::invalid_argument("cannot place edges with fewer than 2 nodes");
  if (edge_count >
      static_cast<std::uint64_t>(node_count) * (node_count - 1))
    throw std::invalid_argument("edge_count exceeds simple-graph capacity");

  SplitMix64 rng = substream(seed, Stream::Fixture);

  // Edge weights, shuffled so histogram membership is independent of
  // placement order.
  std::vector<double> weights;
  weights.reserve(edge_count);
  for (const auto& [rating, count] : histogram)
    weights.insert(weights.end(), count, rating);
  for (std::size_t i = weights.size(); i > 1; --i)
    std::swap(weights[i - 1], weights[rng.next_below(i)]);

  // Heavy-tailed attachment propensity over a random node permutation.
  std::vector<std::uint32_t> rank(node_count);
  for (std::uint32_t i = 0; i < node_count; ++i) rank[i] = i;
  for (std::size_t i = rank.size(); i > 1; --i)
    std::swap(rank[i - 1], rank[rng.next_below(i)]);
  std::vector<double> cumulative(node_count);
  double acc = 0.0;
  for (std::uint32_t i = 0; i < node_count; ++i) {
    acc += 1.0 / (rank[i] + 10.0);
    cumulative[i] = acc;
  }
  auto pick = [&]() -> std::uint32_t {
    double x = rng.next_double() * acc;
    return static_cast<std::uint32_t>(
        std::lower_bound(cumulative.begin(), cumulative.end(), x) -
        cumulative.begin());
  };

  std::unordered_set<std::uint64_t> used;
  used.reserve(edge_count * 2);
  auto key = [node_count](std::uint32_t s, std::uint32_t d) {
    return static_cast<std::uint64_t>(s) * node_count + d;
  };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(edge_count);
  auto place = [&](std::uint32_t s, std::uint32_t d) {
    used.insert(key(s, d));
    edges.emplace_back(s, d);
  };

  // Covering pass: attach each node to a propensity-sampled partner so all
  // node_count identifiers appear in the file. Skipped for nodes beyond the
  // edge budget.
  for (std::uint32_t u = 0; u < node_count && edges.size() < edge_count; ++u) {
    while (true) {
      std::uint32_t v = pick();
      if (v == u) continue;
      bool forward = rng.next_double() < 0.5;
      std::uint32_t s = forward ? u : v;
      std::uint32_t d = forward ? v : u;
      if (used.contains(key(s, d))) {
        if (!used.contains(key(d, s))) {
          place(d, s);
          break;
        }
        continue;
      }
      place(s, d);
      break;
    }
  }

  // Preferential fill for the remaining budget.
  while (edges.size() < edge_count) {
    std::uint32_t s = pick();
    std::uint32_t d = pick();
    if (s == d || used.contains(key(s, d))) continue;
    place(s, d);
  }

  std::string out;
  out.reserve(edges.size() * 16);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += node_name(edges[i].first);
    out += ' ';
    out += node_name(edges[i].second);
    out += ' ';
    out += format_double(weights[i]);
    out += '\n';
  }
  return out;
}

}  // namespace trustrecruit
