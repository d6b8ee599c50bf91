#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "fig2.hpp"
#include "trustrecruit/behavior.hpp"

using namespace trustrecruit;

namespace {

TrustGraph ring_graph(int n) {
  TrustGraph g;
  std::vector<NodeIndex> nodes;
  for (int i = 0; i < n; ++i)
    nodes.push_back(g.add_node("n" + std::to_string(i)));
  for (int i = 0; i < n; ++i) g.add_edge(nodes[i], nodes[(i + 1) % n], 0.8);
  return g;
}

}  // namespace

TEST_CASE("profiles: one per node, deterministic, components in range") {
  TrustGraph g = ring_graph(40);
  SimConfig cfg;
  ProfileTable a = generate_profiles(g, cfg, 11);
  ProfileTable b = generate_profiles(g, cfg, 11);
  REQUIRE(a.size() == g.node_count());
  for (NodeIndex n = 0; n < g.node_count(); ++n) {
    REQUIRE(a[n].expertise.size() == cfg.topics);
    REQUIRE(a[n].locality.size() == cfg.regions);
    CHECK(a[n].expertise == b[n].expertise);
    CHECK(a[n].locality == b[n].locality);
    CHECK(a[n].timeliness == b[n].timeliness);
    CHECK(a[n].latent_quality == b[n].latent_quality);
    for (double e : a[n].expertise) CHECK((e >= 0.0 && e <= 1.0));
    for (double l : a[n].locality) CHECK((l >= 0.0 && l <= 1.0));
    CHECK((a[n].timeliness >= 0.5 && a[n].timeliness <= 1.0));
    CHECK((a[n].latent_quality >= 0.2 && a[n].latent_quality <= 1.0));
  }
  ProfileTable c = generate_profiles(g, cfg, 12);
  CHECK(a[0].latent_quality != c[0].latent_quality);
}

TEST_CASE("profiles honor single-topic single-region configs") {
  TrustGraph g = ring_graph(3);
  SimConfig cfg;
  cfg.topics = 1;
  cfg.regions = 1;
  ProfileTable t = generate_profiles(g, cfg, 5);
  for (const auto& p : t) {
    CHECK(p.expertise.size() == 1);
    CHECK(p.locality.size() == 1);
  }
}

TEST_CASE("requester pool: traversable out-degree, distinct, deterministic") {
  TrustGraph g = ring_graph(30);
  // add an edgeless sink and a node with only a zero-weight edge
  NodeIndex sink = g.add_node("zz_sink");
  NodeIndex zero = g.add_node("zz_zero");
  g.add_edge(zero, sink, 0.0);
  SimConfig cfg;
  cfg.num_requesters = 10;
  auto pool = pick_requester_pool(g, cfg, 3);
  REQUIRE(pool.size() == 10);
  std::set<NodeIndex> uniq(pool.begin(), pool.end());
  CHECK(uniq.size() == 10);
  CHECK(!uniq.contains(sink));
  CHECK(!uniq.contains(zero));
  CHECK(pool == pick_requester_pool(g, cfg, 3));
}

TEST_CASE("task generation: singleton ranges and config thresholds") {
  TrustGraph g = ring_graph(3);
  SimConfig cfg;
  cfg.regions = 1;
  cfg.topics = 1;
  std::vector<NodeIndex> pool{g.find("n0")};
  Task t = generate_task(0, 0, pool, cfg, 9);
  CHECK(t.requester == g.find("n0"));
  CHECK(t.region == 0);
  CHECK(t.topic == 0);
  CHECK(t.locality_threshold == 0.5);
  CHECK(t.expertise_threshold == 0.5);
}

TEST_CASE("task requesters are uniform over the pool") {
  TrustGraph g = ring_graph(25);
  SimConfig cfg;
  cfg.num_requesters = 20;
  auto pool = pick_requester_pool(g, cfg, 1);
  REQUIRE(pool.size() == 20);
  const int n_tasks = 600;
  std::map<NodeIndex, int> freq;
  for (int i = 0; i < n_tasks; ++i)
    ++freq[generate_task(i, 0, pool, cfg, 1).requester];
  // multinomial: mean 30, sigma = sqrt(n p (1-p)) ~ 5.34; allow 3 sigma
  double p = 1.0 / 20, mean = n_tasks * p;
  double sigma = std::sqrt(n_tasks * p * (1 - p));
  for (NodeIndex q : pool) {
    CHECK(freq[q] >= mean - 3 * sigma);
    CHECK(freq[q] <= mean + 3 * sigma);
  }
}

TEST_CASE("contribution draws") {
  ParticipantProfile prof;
  prof.expertise = {0.5};
  prof.locality = {0.5};
  prof.timeliness = 0.7;
  prof.latent_quality = 0.7;
  SimConfig cfg;

  SUBCASE("p_respond zero never responds") {
    cfg.p_respond = 0.0;
    for (int i = 0; i < 200; ++i) {
      SplitMix64 rng(i);
      CHECK_FALSE(sample_contribution(prof, rng, cfg).responded);
    }
  }
  SUBCASE("degenerate noise reproduces latent quality") {
    cfg.sigma_qoc = 0.0;
    SplitMix64 rng(5);
    CHECK(sample_contribution(prof, rng, cfg).qoc == 0.7);
  }
  SUBCASE("Monte-Carlo mean matches latent quality") {
    SplitMix64 rng(123);
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
      ContributionDraw d = sample_contribution(prof, rng, cfg);
      REQUIRE((d.qoc >= 0.0 && d.qoc <= 1.0));
      sum += d.qoc;
    }
    CHECK(sum / n == doctest::Approx(0.7).epsilon(0.015));
  }
}

TEST_CASE("requester evaluation draws") {
  SimConfig cfg;
  SUBCASE("sigma zero makes RE = qoc") {
    cfg.sigma_re = 0.0;
    SplitMix64 rng(1);
    CHECK(sample_requester_evaluation(0.8, rng, cfg) == 0.8);
  }
  SUBCASE("clamped at 1") {
    SplitMix64 rng(2);
    for (int i = 0; i < 500; ++i)
      CHECK(sample_requester_evaluation(1.0, rng, cfg) <= 1.0);
  }
  SUBCASE("Monte-Carlo mean") {
    SplitMix64 rng(3);
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) sum += sample_requester_evaluation(0.5, rng, cfg);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
  }
}

TEST_CASE("social factors: memoized, ordered-pair independent, replayable") {
  TrustGraph g = testing::example_graph();
  SocialFactorCache cache(g, 77);
  NodeIndex a = g.find("R"), b = g.find("P1");
  SocialFactors f1 = cache.get(a, b);
  SocialFactors f2 = cache.get(a, b);
  CHECK(f1.friendship_duration == f2.friendship_duration);
  CHECK(f1.interaction_timegap == f2.interaction_timegap);
  CHECK((f1.friendship_duration >= 0.0 && f1.friendship_duration <= 1.0));

  SocialFactors rev = cache.get(b, a);
  CHECK(f1.friendship_duration != rev.friendship_duration);

  SocialFactorCache replay(g, 77);
  SocialFactors f3 = replay.get(a, b);
  CHECK(f3.friendship_duration == f1.friendship_duration);
  CHECK(f3.interaction_timegap == f1.interaction_timegap);

  CHECK_THROWS(cache.get(a, kInvalidNode));
}

TEST_CASE("contribution streams are keyed by task and participant") {
  SimConfig cfg;
  ParticipantProfile prof;
  prof.latent_quality = 0.6;
  // same key -> same draw; different task or participant -> decoupled
  SplitMix64 r1 = contribution_stream(9, 5, "alice");
  SplitMix64 r2 = contribution_stream(9, 5, "alice");
  CHECK(sample_contribution(prof, r1, cfg).qoc ==
        sample_contribution(prof, r2, cfg).qoc);
  SplitMix64 r3 = contribution_stream(9, 6, "alice");
  SplitMix64 r4 = contribution_stream(9, 5, "bob");
  CHECK(sample_contribution(prof, r3, cfg).qoc !=
        sample_contribution(prof, r4, cfg).qoc);
}
