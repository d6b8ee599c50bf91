#ifndef TRUSTRECRUIT_METRICS_IO_HPP
#define TRUSTRECRUIT_METRICS_IO_HPP

#include <string>
#include <vector>

#include "trustrecruit/config.hpp"
#include "trustrecruit/simulation.hpp"

namespace trustrecruit {

/// Renders one strategy series as CSV text with header
/// `interval,avg_participants,avg_mrt,avg_overall_trust,campaigns`;
/// undefined averages serialize as empty fields.
std::string metrics_csv(const std::vector<IntervalMetrics>& intervals);

/// `interval,requester,participant,implicit_trust,intermediate_count`.
std::string suggestions_csv(const std::vector<SuggestionRecord>& records);

/// Writes metrics_<strategy>.csv per series, suggestions_<strategy>.csv for
/// series that produced suggestion lists, and a run.txt manifest holding
/// the fully resolved config. Returns the written paths. The directory is
/// created if needed.
std::vector<std::string> write_metrics_csv(
    const std::vector<StrategySeries>& series, const SimConfig& cfg,
    const std::string& out_dir);

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_METRICS_IO_HPP
