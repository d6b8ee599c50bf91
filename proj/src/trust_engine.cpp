#include "trustrecruit/trust_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trustrecruit {

double FuzzySystem::Triangle::membership(double x) const {
  if (x < a || x > b) return 0.0;
  if (x == peak) return 1.0;
  if (x < peak) return peak > a ? (x - a) / (peak - a) : 1.0;
  return b > peak ? (b - x) / (b - peak) : 1.0;
}

FuzzySystem FuzzySystem::defaults() {
  FuzzySystem f;
  f.levels = {Triangle{0.0, 0.0, 0.5}, Triangle{0.0, 0.5, 1.0},
              Triangle{0.5, 1.0, 1.0}};
  f.rules = {{{Low, Low, Low}, {Low, Med, Med}, {Low, High, High}}};
  f.finalize();
  return f;
}

FuzzySystem FuzzySystem::from_config(const SimConfig& cfg) {
  FuzzySystem f;
  f.levels = {Triangle{cfg.fuzzy_low[0], cfg.fuzzy_low[1], cfg.fuzzy_low[2]},
              Triangle{cfg.fuzzy_med[0], cfg.fuzzy_med[1], cfg.fuzzy_med[2]},
              Triangle{cfg.fuzzy_high[0], cfg.fuzzy_high[1], cfg.fuzzy_high[2]}};
  // "lll,lmm,lhh": three comma-separated groups, QoC-major.
  const std::string& s = cfg.fuzzy_rules;
  if (s.size() != 11 || s[3] != ',' || s[7] != ',')
    throw std::runtime_error("fuzzy_rules must look like 'lll,lmm,lhh'");
  auto level_of = [](char c) -> Level {
    switch (c) {
      case 'l': return Low;
      case 'm': return Med;
      case 'h': return High;
    }
    throw std::runtime_error("fuzzy_rules letters must be one of l/m/h");
  };
  const int group_start[3] = {0, 4, 8};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      f.rules[i][j] = level_of(s[group_start[i] + j]);
  f.finalize();
  return f;
}

void FuzzySystem::finalize() {
  if (centroid_samples < 2)
    throw std::runtime_error("centroid_samples must be >= 2");
  for (int l = 0; l < 3; ++l) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < centroid_samples; ++i) {
      double x = static_cast<double>(i) / (centroid_samples - 1);
      double mu = levels[l].membership(x);
      num += x * mu;
      den += mu;
    }
    if (den <= 0.0)
      throw std::runtime_error("fuzzy level has empty support on [0,1]");
    centroids_[l] = num / den;
  }
}

double FuzzySystem::infer(double qoc, double top_eff) const {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    double mq = levels[i].membership(qoc);
    if (mq == 0.0) continue;
    for (int j = 0; j < 3; ++j) {
      double mt = levels[j].membership(top_eff);
      if (mt == 0.0) continue;
      double strength = mq * mt;
      num += strength * centroids_[rules[i][j]];
      den += strength;
    }
  }
  if (den <= 0.0) return 0.0;
  return num / den;
}

double evaluate_top(const ParticipantProfile& profile, const Task& task,
                    const SocialFactors& factors,
                    std::span<const double, 5> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("ToP weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("ToP weights must sum to 1");
  return weights[0] * profile.expertise[task.topic] +
         weights[1] * profile.timeliness +
         weights[2] * profile.locality[task.region] +
         weights[3] * factors.friendship_duration +
         weights[4] * factors.interaction_timegap;
}

double effective_top(double top, double route_trust) {
  return top * route_trust;
}

double fuzzy_toc(double qoc, double top_eff, const FuzzySystem& system) {
  return system.infer(qoc, top_eff);
}

double apply_trust_update(TrustGraph& graph, const Route& route, double toc,
                          double rho_req, double re, double th1, double th2) {
  if (route.nodes.size() < 2)
    throw std::invalid_argument("apply_trust_update: route has no edges");
  if (!(th2 < th1)) throw std::invalid_argument("apply_trust_update: th2 must be < th1");
  const double gamma = std::abs(toc - rho_req * re);
  if (toc > th1) {
    for (std::size_t i = 1; i < route.nodes.size(); ++i)
      graph.adjust_edge_trust(route.nodes[i - 1], route.nodes[i], gamma);
  } else if (toc < th2) {
    std::size_t last = route.nodes.size() - 1;
    graph.adjust_edge_trust(route.nodes[last - 1], route.nodes[last], -gamma);
  }
  return gamma;
}

double compute_reputation(const TrustGraph& graph, NodeIndex node) {
  auto in = graph.in_edges(node);
  if (in.empty()) return 0.5;
  double sum = 0.0;
  for (const auto& e : in) sum += e.trust;
  return sum / static_cast<double>(in.size());
}

std::optional<double> overall_trust(std::span<const double> tocs,
                                    double revocation_threshold) {
  double sum = 0.0;
  std::size_t n = 0;
  for (double t : tocs) {
    if (t < revocation_threshold) continue;
    sum += t;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace trustrecruit
