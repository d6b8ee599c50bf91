#ifndef TRUSTRECRUIT_FIXTURE_HPP
#define TRUSTRECRUIT_FIXTURE_HPP

#include <cstdint>
#include <map>
#include <string>

namespace trustrecruit {

/// Generates a random simple directed graph as edge-list text with exactly
/// the requested rating histogram, deterministically for a given seed.
///
/// Wiring is preferential: each node gets a heavy-tailed attachment
/// propensity (rank^-1 over a random permutation), shared between its in-
/// and out-roles, which reproduces the hub structure of real webs of trust;
/// uniform wiring at the Advogato edge density would leave multi-hop
/// neighborhoods unrealistically thin. A covering pass first touches every
/// node once (budget permitting) so the parsed node count equals
/// `node_count` exactly.
///
/// Throws when the histogram does not sum to edge_count or when more edges
/// are requested than a simple directed graph admits.
std::string generate_fixture(std::uint64_t seed, std::uint32_t node_count,
                             std::uint32_t edge_count,
                             const std::map<double, std::size_t>& histogram);

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_FIXTURE_HPP
