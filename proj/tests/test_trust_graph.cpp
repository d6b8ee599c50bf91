#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "fig2.hpp"
#include "trustrecruit/rng.hpp"
#include "trustrecruit/trust_graph.hpp"

using namespace trustrecruit;

static const char* kThreeLine =
    "A B master\n"
    "A C journeyer\n"
    "B C apprentice\n";

TEST_CASE("parse maps rating tokens") {
  TrustGraph g = parse_trust_graph(kThreeLine, RatingMapping::advogato());
  GraphStats s = g.stats();
  CHECK(s.node_count == 3);
  CHECK(s.edge_count == 3);
  CHECK(s.rating_histogram == std::map<double, std::size_t>{
                                  {0.8, 1}, {0.6, 1}, {0.4, 1}});
  CHECK(g.edge_trust(g.find("A"), g.find("B")) == 0.8);
  CHECK(g.edge_trust(g.find("A"), g.find("C")) == 0.6);
  CHECK(g.edge_trust(g.find("B"), g.find("C")) == 0.4);
}

TEST_CASE("parse accepts decimals, comments, blank lines, tabs") {
  TrustGraph g = parse_trust_graph("# comment\n\na\tb\t0.25\n  c d 1\n",
                                   RatingMapping::advogato());
  CHECK(g.stats().edge_count == 2);
  CHECK(g.edge_trust(g.find("a"), g.find("b")) == 0.25);
  CHECK(g.edge_trust(g.find("c"), g.find("d")) == 1.0);
}

TEST_CASE("empty input gives empty graph") {
  TrustGraph g = parse_trust_graph("", RatingMapping::advogato());
  GraphStats s = g.stats();
  CHECK(s.node_count == 0);
  CHECK(s.edge_count == 0);
  CHECK(s.rating_histogram.empty());
}

TEST_CASE("parse error paths") {
  auto m = RatingMapping::advogato();
  CHECK_THROWS_WITH_AS(parse_trust_graph("A A master\n", m),
                       doctest::Contains("self-loop"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_trust_graph("A B master\nA B 0.5\n", m),
                       doctest::Contains("duplicate"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_trust_graph("A B wizard\n", m),
                       doctest::Contains("unknown rating"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_trust_graph("A B\n", m),
                       doctest::Contains("3 fields"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_trust_graph("A B 1.5\n", m),
                       doctest::Contains("outside [0,1]"), std::runtime_error);
  CHECK_THROWS(parse_trust_graph("A B -0.1\n", m));
}

TEST_CASE("parse then stats counts unique well-formed lines") {
  std::string text;
  for (int i = 0; i < 57; ++i)
    text += "n" + std::to_string(i) + " m" + std::to_string(i) + " 0.5\n";
  TrustGraph g = parse_trust_graph(text, RatingMapping::advogato());
  CHECK(g.stats().edge_count == 57);
}

TEST_CASE("out_neighbors is lexicographic and respects the routing flag") {
  TrustGraph g = testing::example_graph();
  auto nb = g.out_neighbors(g.find("R"));
  REQUIRE(nb.size() == 2);
  CHECK(g.id_of(nb[0].first) == "P1");
  CHECK(nb[0].second == 0.7);
  CHECK(g.id_of(nb[1].first) == "P2");
  CHECK(nb[1].second == 0.9);

  CHECK(g.out_neighbors(g.find("P4")).empty());  // sink

  TrustGraph z;
  z.add_edge(z.add_node("x"), z.add_node("y"), 0.0);
  CHECK(z.out_neighbors(z.find("x")).empty());
  CHECK(z.out_neighbors(z.find("x"), false).size() == 1);
  CHECK_THROWS(z.out_neighbors(kInvalidNode));
}

TEST_CASE("adjust_edge_trust applies clamped deltas") {
  TrustGraph g;
  NodeIndex a = g.add_node("a"), b = g.add_node("b");
  g.add_edge(a, b, 0.7);
  CHECK(g.adjust_edge_trust(a, b, 0.17) == doctest::Approx(0.87).epsilon(1e-12));
  g.adjust_edge_trust(a, b, 0.95 - 0.87);
  CHECK(g.adjust_edge_trust(a, b, 0.2) == 1.0);
  TrustGraph h;
  NodeIndex c = h.add_node("c"), d = h.add_node("d");
  h.add_edge(c, d, 0.1);
  CHECK(h.adjust_edge_trust(c, d, -0.47) == 0.0);
  CHECK_THROWS_WITH_AS(h.adjust_edge_trust(d, c, 0.1),
                       doctest::Contains("missing edge"), std::runtime_error);
}

TEST_CASE("edge weights stay in [0,1] under random delta sequences") {
  TrustGraph g;
  NodeIndex a = g.add_node("a"), b = g.add_node("b");
  g.add_edge(a, b, 0.5);
  SplitMix64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    double v = g.adjust_edge_trust(a, b, rng.uniform(-1.5, 1.5));
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0);
    REQUIRE(v == g.edge_trust(a, b));
  }
}

TEST_CASE("add_friendship") {
  TrustGraph g = testing::example_graph();
  g.add_friendship("R", "P4", 0.6);
  auto nb = g.out_neighbors(g.find("R"));
  REQUIRE(nb.size() == 3);
  CHECK(g.id_of(nb[2].first) == "P4");
  CHECK(nb[2].second == 0.6);

  CHECK_THROWS(g.add_friendship("R", "X", 1.2));
  CHECK_THROWS_WITH_AS(g.add_friendship("R", "P1", 0.5),
                       doctest::Contains("already exists"), std::runtime_error);
}

TEST_CASE("in_edges mirror out_edges after updates") {
  TrustGraph g = testing::example_graph();
  NodeIndex p2 = g.find("P2"), p4 = g.find("P4");
  g.adjust_edge_trust(p2, p4, 0.3);
  auto in = g.in_edges(p4);
  REQUIRE(in.size() == 2);
  // in-edges sorted by source id: P2 before P3
  CHECK(g.id_of(in[0].peer) == "P2");
  CHECK(in[0].trust == doctest::Approx(0.9));
  CHECK(g.id_of(in[1].peer) == "P3");
}

TEST_CASE("serialize/parse round trip is identity") {
  SplitMix64 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    TrustGraph g;
    int n = 2 + static_cast<int>(rng.next_below(8));
    std::vector<NodeIndex> nodes;
    for (int i = 0; i < n; ++i)
      nodes.push_back(g.add_node("n" + std::to_string(i)));
    // edge-list serialization only captures nodes with incident edges, so
    // give every node one before adding random extras
    for (int i = 0; i < n; ++i)
      g.add_edge(nodes[i], nodes[(i + 1) % n], rng.next_double());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && j != (i + 1) % n && rng.next_double() < 0.4)
          g.add_edge(nodes[i], nodes[j], rng.next_double());

    std::string text = serialize_trust_graph(g);
    TrustGraph h = parse_trust_graph(text, RatingMapping::advogato());
    REQUIRE(h.stats().node_count == g.stats().node_count);
    REQUIRE(h.stats().edge_count == g.stats().edge_count);
    for (NodeIndex a : g.nodes_sorted()) {
      NodeIndex ha = h.find(g.id_of(a));
      REQUIRE(ha != kInvalidNode);
      for (const auto& e : g.out_edges(a)) {
        REQUIRE(h.edge_trust(ha, h.find(g.id_of(e.peer))) == e.trust);
      }
    }
    CHECK(serialize_trust_graph(h) == text);
  }
}
