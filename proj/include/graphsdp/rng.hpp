#pragma once

// Project-wide deterministic PRNG: SplitMix64.
//
// State advances by the 64-bit golden-ratio increment gamma = 0x9E3779B97F4A7C15;
// each output is a shift-xor-multiply mix of the advanced state. The generator is
// counter-based: output t of seed s equals mix64(s + (t+1)*gamma), so substreams
// can be derived by index (derive(seed, t)) without consuming the parent stream.
//
// Reference stream, seed 0 (matches the published SplitMix64 vectors):
//   e220a8397b1dcdaf 6e789e6aa1b965f4 06c45d188009454f f88bb8a8724c81ec
//
// Uniform doubles take the top 53 bits mapped into (0, 1] (never 0, so log(u)
// stays finite); Gaussians use Box-Muller with the second value cached.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace graphsdp {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix64(state_);
  }

  // Uniform on (0, 1].
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, bound), bound >= 1. Lemire multiply-shift with rejection; unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Standard normal via Box-Muller; generates pairs, caches the second.
  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // Substream/trial seed: stream element `index` of `seed`, computed directly.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGamma);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Fisher-Yates shuffle driven by SplitMix64 (std::shuffle is not seed-stable
// across standard library implementations).
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.next_below(i)]);
  }
}

}  // namespace graphsdp
