#ifndef TRUSTRECRUIT_TRUST_ENGINE_HPP
#define TRUSTRECRUIT_TRUST_ENGINE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "trustrecruit/behavior.hpp"
#include "trustrecruit/config.hpp"
#include "trustrecruit/recruitment.hpp"
#include "trustrecruit/trust_graph.hpp"

namespace trustrecruit {

/// Two-input fuzzy scorer mapping (QoC, route-corrected ToP) to ToC.
///
/// Three triangular levels per input (low/med/high, shared shapes) and per
/// output. Rule strengths use the product t-norm and are accumulated per
/// output level; the score is the strength-weighted mean of the output
/// levels' centroids, each computed once from a 201-point uniform
/// discretization of [0,1]. With the triangular levels forming a partition
/// of unity this evaluates to a bilinear interpolation of the rule table,
/// which keeps the score monotone non-decreasing in both inputs (plain
/// min/max aggregation with clipped-shape centroids is not monotone).
class FuzzySystem {
 public:
  struct Triangle {
    double a, peak, b;
    double membership(double x) const;
  };

  enum Level { Low = 0, Med = 1, High = 2 };

  /// Rule table, QoC-major: rules[qoc_level][top_level] = output level.
  /// Default: low quality forces low whatever the trust; medium quality
  /// caps at medium; high quality scores by participant trust, with medium
  /// trust already sufficient for a high rating (route attenuation keeps
  /// the corrected ToP of multi-hop participants below the high band, so
  /// demanding high trust as well would make rewards unreachable).
  static FuzzySystem defaults();

  /// Builds from config triangles and the "lll,lmm,lhh" rule string.
  static FuzzySystem from_config(const SimConfig& cfg);

  double infer(double qoc, double top_eff) const;

  double level_centroid(Level l) const { return centroids_[l]; }

  std::array<Triangle, 3> levels;                  // inputs and output
  std::array<std::array<Level, 3>, 3> rules;
  int centroid_samples = 201;

  void finalize();  // recompute sampled centroids after edits

 private:
  std::array<double, 3> centroids_{};
};

/// Weighted-sum ToP over (expertise[topic], timeliness, locality[region],
/// friendship duration, interaction timegap). Weights must be non-negative
/// and sum to 1 (tolerance 1e-9).
double evaluate_top(const ParticipantProfile& profile, const Task& task,
                    const SocialFactors& factors,
                    std::span<const double, 5> weights);

/// Route correction: the participant trust seen by the requester is
/// attenuated by the route, ToP * trust(r).
double effective_top(double top, double route_trust);

double fuzzy_toc(double qoc, double top_eff, const FuzzySystem& system);

struct Contribution {
  std::uint64_t task_id = 0;
  NodeIndex participant = kInvalidNode;
  Route route;
  double qoc = 0.0;
  double top = 0.0;
  double top_effective = 0.0;
  double toc = 0.0;
  double re = 0.0;
  bool revoked = false;
};

/// Reward/penalty update along a route. gamma = |toc - rho_req * re|.
/// toc > th1: every route edge gains +gamma (clamped to [0,1]);
/// toc < th2: only the final edge loses gamma (clamped);
/// otherwise the graph is untouched. Returns gamma.
double apply_trust_update(TrustGraph& graph, const Route& route, double toc,
                          double rho_req, double re, double th1, double th2);

/// Mean of incoming edge weights; 0.5 neutral prior when in-degree is 0.
double compute_reputation(const TrustGraph& graph, NodeIndex node);

/// Mean ToC over contributions surviving revocation (toc >= threshold
/// kept); nullopt when every contribution is revoked or the list is empty.
std::optional<double> overall_trust(std::span<const double> tocs,
                                    double revocation_threshold);

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_TRUST_ENGINE_HPP
