#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "fig2.hpp"
#include "trustrecruit/fixture.hpp"
#include "trustrecruit/metrics_io.hpp"
#include "trustrecruit/simulation.hpp"

using namespace trustrecruit;

namespace {

// Small synthetic world for harness tests: 120 nodes, heavy enough to give
// multi-hop reach, cheap enough for unit tests.
SimConfig small_config() {
  SimConfig cfg;
  cfg.graph_path = "synthetic";
  cfg.fixture_seed = 5;
  cfg.fixture_nodes = 120;
  cfg.fixture_edges = 500;
  cfg.fixture_histogram = {{0.8, 200}, {0.6, 200}, {0.4, 100}};
  cfg.intervals = 4;
  cfg.tasks_per_interval = 10;
  cfg.num_requesters = 6;
  cfg.seed = 21;
  return cfg;
}

bool metrics_equal(const IntervalMetrics& a, const IntervalMetrics& b) {
  return a.interval == b.interval && a.campaigns == b.campaigns &&
         a.avg_participants == b.avg_participants && a.avg_mrt == b.avg_mrt &&
         a.avg_overall_trust == b.avg_overall_trust;
}

}  // namespace

TEST_CASE("compute_mrt") {
  Route direct{{0, 1}, 0.7};
  Route r4{{0, 2, 3, 4}, 0.72675};
  CHECK(*compute_mrt(std::vector<Route>{direct, r4}) ==
        doctest::Approx(0.3566875).epsilon(1e-12));
  CHECK(*compute_mrt(std::vector<Route>{Route{{0, 1}, 0.42}}) == 0.42);
  CHECK_FALSE(compute_mrt(std::vector<Route>{}).has_value());
}

TEST_CASE("one-hop campaign with an out-degree-zero requester") {
  TrustGraph g;
  NodeIndex lonely = g.add_node("lonely");
  NodeIndex other = g.add_node("other");
  g.add_edge(other, lonely, 0.8);  // lonely has in-edges only
  SimConfig cfg;
  cfg.num_requesters = 1;
  cfg.intervals = 1;
  cfg.tasks_per_interval = 1;
  Simulation sim(g, cfg, StrategyKind::OneHop);

  Task t;
  t.id = 0;
  t.requester = lonely;
  t.region = 0;
  t.topic = 0;
  CampaignResult r = sim.run_campaign(t);
  CHECK(r.recruited == 0);
  CHECK_FALSE(r.overall_trust.has_value());
  CHECK_FALSE(r.mrt.has_value());
  CHECK(r.routes.empty());
}

TEST_CASE("forced high quality survives revocation end to end") {
  // star: requester with three master friends, perfect behavior
  TrustGraph g;
  NodeIndex r = g.add_node("req");
  for (const char* id : {"a", "b", "c"}) g.add_edge(r, g.add_node(id), 0.8);
  g.add_edge(g.find("a"), r, 0.8);  // give the pool check an out-edge everywhere

  SimConfig cfg;
  cfg.p_respond = 1.0;
  cfg.sigma_qoc = 0.0;
  cfg.sigma_re = 0.0;
  cfg.num_requesters = 4;
  Simulation sim(g, cfg, StrategyKind::OneHop);

  Task t;
  t.id = 3;
  t.requester = r;
  t.region = 0;
  t.topic = 0;
  CampaignResult res = sim.run_campaign(t);
  REQUIRE(res.recruited == 3);
  // latent quality floor is 0.2; responders' qoc = latent here. Not all
  // survive necessarily, but the fixture profile seed must leave at least
  // one suitable-quality node; regenerate deterministic expectations:
  std::size_t survivors = 0;
  for (const Contribution& c : res.contributions) {
    CHECK(c.top_effective == doctest::Approx(c.top * 0.8));
    CHECK((c.revoked == (c.toc < cfg.revocation)));
    if (!c.revoked) ++survivors;
  }
  if (survivors > 0) {
    REQUIRE(res.overall_trust.has_value());
    CHECK(*res.overall_trust >= cfg.revocation);
  } else {
    CHECK_FALSE(res.overall_trust.has_value());
  }
}

TEST_CASE("campaigns are deterministic for a fixed config") {
  SimConfig cfg = small_config();
  TrustGraph g = simulation_graph(cfg);

  Simulation a(g, cfg, StrategyKind::MultiHop);
  Simulation b(g, cfg, StrategyKind::MultiHop);
  for (int i = 0; i < 2; ++i) {
    IntervalMetrics ma = a.run_interval();
    IntervalMetrics mb = b.run_interval();
    CHECK(metrics_equal(ma, mb));
  }
}

TEST_CASE("interval zero is identical for both multi-hop strategies") {
  SimConfig cfg = small_config();
  TrustGraph g = simulation_graph(cfg);
  for (std::uint64_t seed : {1ULL, 7ULL, 21ULL}) {
    cfg.seed = seed;
    Simulation mh(g, cfg, StrategyKind::MultiHop);
    Simulation fs(g, cfg, StrategyKind::MultiHopFS);
    IntervalMetrics m0 = mh.run_interval();
    IntervalMetrics f0 = fs.run_interval();
    CHECK(metrics_equal(m0, f0));
  }
}

TEST_CASE("suggestions grow the graph when eligibility is forced") {
  // line requester -> mid -> far with ideal behavior: far accumulates
  // implicit trust fast and becomes a friend at interval end.
  TrustGraph g;
  NodeIndex r = g.add_node("req");
  NodeIndex mid = g.add_node("mid");
  NodeIndex far = g.add_node("far");
  g.add_edge(r, mid, 0.9);
  g.add_edge(mid, far, 0.9);
  g.add_edge(far, mid, 0.9);

  SimConfig cfg;
  cfg.p_respond = 1.0;
  cfg.sigma_qoc = 0.0;
  cfg.sigma_re = 0.0;
  cfg.topics = 1;
  cfg.regions = 1;
  cfg.num_requesters = 1;
  cfg.tasks_per_interval = 12;
  cfg.intervals = 1;
  cfg.locality_threshold = 0.0;
  cfg.expertise_threshold = 0.0;

  // rewards need a high-quality far participant; pick a seed whose profile
  // draw gives one (deterministic search)
  std::uint64_t chosen = 0;
  for (std::uint64_t s = 1; s <= 200; ++s) {
    ProfileTable t = generate_profiles(g, cfg, s);
    const ParticipantProfile& p = t[far];
    double top = 0.35 * p.expertise[0] + 0.2 * p.timeliness +
                 0.35 * p.locality[0];
    if (p.latent_quality > 0.95 && top > 0.6) {
      chosen = s;
      break;
    }
  }
  REQUIRE(chosen != 0);
  cfg.seed = chosen;

  Simulation sim(g, cfg, StrategyKind::MultiHopFS);
  std::size_t edges_before = sim.graph().edge_count();
  sim.run_interval();
  CHECK(sim.graph().edge_count() > edges_before);
  CHECK(sim.ledger().retired(r, far));
  CHECK(sim.graph().has_edge(r, far));
}

TEST_CASE("graph never shrinks; only the suggestion strategy adds edges") {
  SimConfig cfg = small_config();
  TrustGraph g = simulation_graph(cfg);
  std::size_t nodes0 = g.node_count(), edges0 = g.edge_count();

  Simulation oh(g, cfg, StrategyKind::OneHop);
  Simulation mh(g, cfg, StrategyKind::MultiHop);
  Simulation fs(g, cfg, StrategyKind::MultiHopFS);
  for (std::uint32_t i = 0; i < cfg.intervals; ++i) {
    oh.run_interval();
    mh.run_interval();
    fs.run_interval();
  }
  CHECK(oh.graph().node_count() == nodes0);
  CHECK(oh.graph().edge_count() == edges0);
  CHECK(mh.graph().node_count() == nodes0);
  CHECK(mh.graph().edge_count() == edges0);
  CHECK(fs.graph().node_count() == nodes0);
  CHECK(fs.graph().edge_count() >= edges0);
}

TEST_CASE("run_simulation produces one series per strategy") {
  SimConfig cfg = small_config();
  cfg.intervals = 2;
  auto series = run_simulation(cfg);
  REQUIRE(series.size() == 3);
  for (const auto& s : series) {
    CHECK(s.intervals.size() == 2);
    for (const auto& m : s.intervals) CHECK(m.campaigns == cfg.tasks_per_interval);
  }
}

TEST_CASE("zero-task intervals produce none-averages") {
  SimConfig cfg = small_config();
  cfg.tasks_per_interval = 0;
  cfg.intervals = 1;
  TrustGraph g = simulation_graph(cfg);
  Simulation sim(g, cfg, StrategyKind::MultiHop);
  IntervalMetrics m = sim.run_interval();
  CHECK(m.campaigns == 0);
  CHECK_FALSE(m.avg_participants.has_value());
  CHECK_FALSE(m.avg_mrt.has_value());
  CHECK_FALSE(m.avg_overall_trust.has_value());
}

TEST_CASE("metrics CSV schema and none-serialization") {
  std::vector<IntervalMetrics> ms(2);
  ms[0].interval = 0;
  ms[0].avg_participants = 2.5;
  ms[0].avg_mrt = 0.25;
  ms[0].avg_overall_trust = 0.625;
  ms[0].campaigns = 30;
  ms[1].interval = 1;
  ms[1].campaigns = 0;
  std::string csv = metrics_csv(ms);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "interval,avg_participants,avg_mrt,avg_overall_trust,campaigns");
  std::getline(in, line);
  CHECK(line == "0,2.5,0.25,0.625,30");
  std::getline(in, line);
  CHECK(line == "1,,,,0");
}
