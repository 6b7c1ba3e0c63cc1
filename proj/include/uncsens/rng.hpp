#pragma once

#include <cmath>
#include <cstdint>

#include "uncsens/errors.hpp"

namespace uncsens {

namespace detail {

// SplitMix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

// Counter-based random stream: every draw is a pure function of
// (master_seed, stream_id, counter), so results do not depend on execution
// order or thread schedule. Distinct stream_ids give independent sequences.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
  std::uint64_t counter = 0;

  RngStream() = default;
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : master_seed(seed), stream_id(stream) {}

  // Child stream keyed by (a, b); does not disturb this stream's counter.
  RngStream substream(std::uint64_t a, std::uint64_t b = 0) const {
    std::uint64_t id = detail::mix64(stream_id + detail::kGolden);
    id = detail::mix64(id ^ (a + detail::kGolden));
    id = detail::mix64(id ^ (b + detail::kGolden));
    return RngStream(master_seed, id);
  }

  std::uint64_t next_u64() {
    std::uint64_t key = detail::mix64(master_seed + detail::kGolden) ^
                        detail::mix64(stream_id * 0xda942042e4dd58b5ULL + 1);
    return detail::mix64(key + (counter++) * detail::kGolden);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); n > 0.
  std::uint64_t uniform_below(std::uint64_t n) {
    return next_u64() % n;
  }

  // Standard normal via Box-Muller; consumes exactly two counter values.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    // u1 = 0 would send log to -inf; nudge to the smallest representable draw.
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }
};

// Draw from N(mean, variance). variance == 0 returns mean exactly (the
// scaled variate is exactly 0). Always consumes two counter values, so the
// stream position does not depend on the variance value.
inline double gaussian_draw(RngStream& stream, double mean, double variance) {
  if (variance < 0.0) {
    throw domain_error("gaussian_draw: negative variance " + std::to_string(variance));
  }
  return mean + std::sqrt(variance) * stream.normal();
}

}  // namespace uncsens
