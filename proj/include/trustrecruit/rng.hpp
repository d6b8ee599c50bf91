#ifndef TRUSTRECRUIT_RNG_HPP
#define TRUSTRECRUIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace trustrecruit {

/// Deterministic 64-bit generator (SplitMix64, Steele et al.).
/// Used everywhere instead of std:: distributions so that a given seed
/// produces the same stream on every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Unbiased integer in [0, n). Lemire's multiply-shift rejection method.
  std::uint64_t next_below(std::uint64_t n) {
    using u128 = unsigned __int128;
    std::uint64_t x = next_u64();
    u128 m = static_cast<u128>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<u128>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Gaussian via Box-Muller; consumes exactly two draws per call.
  double normal(double mean, double sigma) {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a hash of a node identifier, for keying per-node substreams.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Purpose tags for independent substreams. Adding a stream must not
/// perturb draws of any other stream, so every consumer derives its own
/// generator from (seed, tag, keys...) instead of sharing a sequence.
enum class Stream : std::uint64_t {
  Profiles = 0x50524f46,       // "PROF"
  Tasks = 0x5441534b,          // "TASK"
  Contributions = 0x434f4e54,  // "CONT"
  Factors = 0x46414354,        // "FACT"
  RequesterPool = 0x504f4f4c,  // "POOL"
  Fixture = 0x46495854,        // "FIXT"
};

inline std::uint64_t mix_key(std::uint64_t seed, Stream tag,
                             std::uint64_t k1 = 0, std::uint64_t k2 = 0) {
  SplitMix64 m(seed ^ (static_cast<std::uint64_t>(tag) * 0x9e3779b97f4a7c15ULL));
  std::uint64_t h = m.next_u64();
  SplitMix64 m1(h ^ k1);
  h = m1.next_u64();
  SplitMix64 m2(h ^ k2);
  return m2.next_u64();
}

inline SplitMix64 substream(std::uint64_t seed, Stream tag,
                            std::uint64_t k1 = 0, std::uint64_t k2 = 0) {
  return SplitMix64(mix_key(seed, tag, k1, k2));
}

}  // namespace trustrecruit

#endif  // TRUSTRECRUIT_RNG_HPP
