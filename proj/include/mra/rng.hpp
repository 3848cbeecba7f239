// rng.hpp — seeded deterministic random streams.
//
// Everything random in the toolkit (placement, OD selection, grouping) is drawn
// from a splitmix64 stream derived from one master seed plus a named tag, so a
// whole experiment replays from a single integer. No <random> distributions are
// used: their output is implementation-defined and would break cross-platform
// reproducibility.
#pragma once

#include <cstdint>
#include <string_view>

namespace mra {

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

// Derives the seed of a named sub-stream. Extra indices select siblings
// (e.g. one stream per network, per OD set).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t x = detail::splitmix64(seed ^ detail::fnv1a64(tag));
  x = detail::splitmix64(x ^ a);
  x = detail::splitmix64(x ^ b);
  return x;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform double in [0, 1), 53 significant bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), unbiased by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  Rng substream(std::string_view tag, std::uint64_t a = 0, std::uint64_t b = 0) const {
    return Rng(derive_seed(state_, tag, a, b));
  }

 private:
  std::uint64_t state_;
};

}  // namespace mra
