#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "impulse/image.hpp"

namespace impulse {

/// Fixed-valued impulse noise parameters.
struct NoiseSpec {
  double density = 0.0;        // probability that a pixel is corrupted
  double salt_fraction = 0.5;  // probability that a corrupted pixel becomes 255
  std::uint64_t seed = 0;

  void validate() const {
    if (!(density >= 0.0 && density <= 1.0)) {
      throw std::invalid_argument("noise density must lie in [0, 1], got " +
                                  std::to_string(density));
    }
    if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0)) {
      throw std::invalid_argument("salt fraction must lie in [0, 1], got " +
                                  std::to_string(salt_fraction));
    }
  }
};

// Random numbers come from SplitMix64 used as a counter-based generator: the
// stream state is mix64(seed) and draw k is mix64(state + (k + 1) * gamma),
// which equals the k-th output of a SplitMix64 seeded with mix64(seed). Pixel i
// consumes draw 2i (corrupt or not) and draw 2i + 1 (salt or pepper), so the
// result does not depend on the order pixels are visited. This generator and
// stream layout are fixed; changing either invalidates golden values.

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept : state_(mix64(seed)) {}

  constexpr std::uint64_t draw(std::uint64_t counter) const noexcept {
    return mix64(state_ + (counter + 1) * kGoldenGamma);
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(draw(counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Corrupts each pixel independently with probability `spec.density`.
inline GrayImage inject(const GrayImage& image, const NoiseSpec& spec) {
  spec.validate();
  GrayImage out = image;
  const CounterRng rng(spec.seed);
  auto px = out.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (rng.uniform(2 * i) < spec.density) {
      px[i] = rng.uniform(2 * i + 1) < spec.salt_fraction ? kSalt : kPepper;
    }
  }
  return out;
}

}  // namespace impulse
