#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

#include "impulse/image.hpp"
#include "impulse/noise.hpp"

namespace impulse {

namespace detail {

// Standard normal variate from two counter draws (Box-Muller).
inline double normal_draw(const CounterRng& rng, std::uint64_t counter) {
  const double u1 = 1.0 - rng.uniform(2 * counter);  // (0, 1]
  const double u2 = rng.uniform(2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

}  // namespace detail

/// Deterministic stand-in for a natural photograph.
///
/// Mid-grey background with a slow gradient and a wave, a bright disc and a
/// dark rectangle for hard edges, band-limited value noise for texture, a
/// fine diagonal pattern and per-pixel grain. Samples are clamped to
/// [1, 254] so no clean pixel registers as an impulse.
inline GrayImage make_test_image(std::size_t size = 256, std::uint64_t seed = 1) {
  constexpr double kContrast = 15.0;
  constexpr double kTexture = 10.0;
  constexpr double kGrain = 10.0;
  constexpr std::size_t kCell = 8;
  const double n = static_cast<double>(size);
  const double pi2 = 2.0 * std::numbers::pi;

  const CounterRng lattice_rng(seed ^ 0x1a77ULL);
  const CounterRng fine_rng(seed ^ 0xf17eULL);
  const CounterRng grain_rng(seed ^ 0x6a12ULL);

  const std::size_t cells = size / kCell + 2;
  std::vector<double> lattice(cells * cells);
  for (std::size_t i = 0; i < lattice.size(); ++i) lattice[i] = detail::normal_draw(lattice_rng, i);

  // Unit-variance noise with short-range correlation: white noise through a
  // 3x3 binomial kernel (output std is 3/8 of the input std).
  std::vector<double> white(size * size);
  for (std::size_t i = 0; i < white.size(); ++i) white[i] = detail::normal_draw(fine_rng, i);
  std::vector<double> fine(size * size);
  constexpr double kBinomial[3] = {1.0, 2.0, 1.0};
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      double acc = 0.0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const auto rr = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(r) + dr, 0,
                                                     static_cast<std::ptrdiff_t>(size) - 1);
          const auto cc = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(c) + dc, 0,
                                                     static_cast<std::ptrdiff_t>(size) - 1);
          acc += kBinomial[dr + 1] * kBinomial[dc + 1] *
                 white[static_cast<std::size_t>(rr) * size + static_cast<std::size_t>(cc)];
        }
      }
      fine[r * size + c] = acc / 16.0 / 0.375;
    }
  }

  GrayImage img(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      const double y = static_cast<double>(r) / n;
      const double x = static_cast<double>(c) / n;
      double v = 128.0 + kContrast * (0.5 * (x - 0.5) + 0.3 * std::sin(pi2 * 1.3 * y));
      if (std::hypot(x - 0.35, y - 0.4) < 0.18) v += 0.5 * kContrast;
      if (x > 0.6 && x < 0.85 && y > 0.55 && y < 0.9) v -= 0.45 * kContrast;

      const std::size_t gr = r / kCell;
      const std::size_t gc = c / kCell;
      const double tr = detail::smoothstep(static_cast<double>(r % kCell) / kCell);
      const double tc = detail::smoothstep(static_cast<double>(c % kCell) / kCell);
      auto L = [&](std::size_t i, std::size_t j) { return lattice[i * cells + j]; };
      const double top = L(gr, gc) * (1 - tc) + L(gr, gc + 1) * tc;
      const double bottom = L(gr + 1, gc) * (1 - tc) + L(gr + 1, gc + 1) * tc;
      const double value_noise = top * (1 - tr) + bottom * tr;

      v += kTexture * (0.5 * value_noise + fine[r * size + c]);
      v += 6.0 * std::sin(pi2 * (23.0 * x + 17.0 * y));
      v += kGrain * detail::normal_draw(grain_rng, r * size + c);
      img.at(r, c) = static_cast<Pixel>(std::clamp(std::lround(v), 1L, 254L));
    }
  }
  return img;
}

}  // namespace impulse
