// Shared 5-node route-selection example graph used across test suites:
// a requester R and participants P1..P4 with seven weighted edges.
#ifndef TRUSTRECRUIT_TESTS_FIG2_HPP
#define TRUSTRECRUIT_TESTS_FIG2_HPP

#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit::testing {

inline TrustGraph example_graph() {
  TrustGraph g;
  NodeIndex r = g.add_node("R");
  NodeIndex p1 = g.add_node("P1");
  NodeIndex p2 = g.add_node("P2");
  NodeIndex p3 = g.add_node("P3");
  NodeIndex p4 = g.add_node("P4");
  g.add_edge(r, p1, 0.7);
  g.add_edge(r, p2, 0.9);
  g.add_edge(p1, p2, 0.75);
  g.add_edge(p1, p3, 0.65);
  g.add_edge(p2, p3, 0.95);
  g.add_edge(p2, p4, 0.6);
  g.add_edge(p3, p4, 0.85);
  return g;
}

}  // namespace trustrecruit::testing

#endif  // TRUSTRECRUIT_TESTS_FIG2_HPP
