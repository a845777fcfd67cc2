#pragma once

#include <cstdint>
#include <string_view>

namespace terra {

/// splitmix64 increment-and-finalize, used as a one-shot 64-bit hash.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr uint64_t hash_combine(uint64_t a, uint64_t b) { return mix64(a ^ mix64(b)); }

constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Sequential splitmix64 stream. Output is a pure function of the seed, so a
/// stream keyed off (seed, pixel, sample) is independent of tiling and thread
/// schedule.
class SplitMix {
 public:
  explicit SplitMix(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  uint64_t state_;
};

inline SplitMix pixel_rng(uint64_t seed, uint32_t px, uint32_t py, uint32_t sample) {
  uint64_t h = mix64(seed);
  h = hash_combine(h, (static_cast<uint64_t>(py) << 32) | px);
  h = hash_combine(h, sample);
  return SplitMix(h);
}

}  // namespace terra
