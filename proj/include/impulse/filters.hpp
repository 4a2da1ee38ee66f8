#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "impulse/image.hpp"

namespace impulse {

enum class FilterKind { smf, amf, mdbutmf, rmf };

inline constexpr std::array<FilterKind, 4> kAllFilters = {FilterKind::smf, FilterKind::amf,
                                                          FilterKind::mdbutmf, FilterKind::rmf};

constexpr std::string_view to_string(FilterKind kind) noexcept {
  switch (kind) {
    case FilterKind::smf: return "smf";
    case FilterKind::amf: return "amf";
    case FilterKind::mdbutmf: return "mdbutmf";
    case FilterKind::rmf: return "rmf";
  }
  return "?";
}

inline std::optional<FilterKind> parse_filter_kind(std::string_view name) {
  for (FilterKind k : kAllFilters) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

struct FilterConfig {
  FilterKind kind = FilterKind::rmf;
  std::size_t window_size = 3;
  std::size_t max_window_size = 7;  // amf only

  void validate() const {
    check_window_size(window_size);
    check_window_size(max_window_size);
    if (max_window_size < window_size) {
      throw std::invalid_argument("max window size " + std::to_string(max_window_size) +
                                  " is smaller than window size " + std::to_string(window_size));
    }
  }
};

struct RestoredImage {
  GrayImage image;
  std::size_t replaced_count = 0;
};

/// Order in which pixels are visited. Every window reads the input image, so
/// the result is the same either way; the choice exists to test that.
enum class ScanOrder { forward, reverse };

/// The shared impulse detector: only the two extreme levels count as noise.
constexpr bool is_noisy(Pixel value) noexcept { return value == kPepper || value == kSalt; }

namespace detail {

// Integer mean rounded half away from zero, clamped to the pixel range.
inline Pixel rounded_mean(std::uint64_t sum, std::uint64_t count) {
  const std::uint64_t q = (2 * sum + count) / (2 * count);
  return static_cast<Pixel>(std::min<std::uint64_t>(q, 255));
}

// Lower median: element (n - 1) / 2 of the sorted values. Reorders `values`.
inline Pixel lower_median(std::span<Pixel> values) {
  auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

template <class PerPixel>
RestoredImage scan(const GrayImage& input, ScanOrder order, PerPixel&& per_pixel) {
  RestoredImage out{input, 0};
  const std::size_t h = input.height();
  const std::size_t w = input.width();
  auto visit = [&](std::size_t r, std::size_t c) {
    bool replaced = false;
    out.image.at(r, c) = per_pixel(r, c, replaced);
    if (replaced) ++out.replaced_count;
  };
  if (order == ScanOrder::forward) {
    for (std::size_t r = 0; r < h; ++r)
      for (std::size_t c = 0; c < w; ++c) visit(r, c);
  } else {
    for (std::size_t r = h; r-- > 0;)
      for (std::size_t c = w; c-- > 0;) visit(r, c);
  }
  return out;
}

inline void require_kind(const FilterConfig& config, FilterKind expected) {
  if (config.kind != expected) {
    throw std::invalid_argument("filter config is " + std::string(to_string(config.kind)) +
                                ", expected " + std::string(to_string(expected)));
  }
  config.validate();
}

// Shared body of the detector-gated trimmed filters. Noise-free pixels pass
// through. A noisy pixel is replaced by `reduce` over the window entries that
// are not 0 or 255, or by the rounded mean of the whole window when every
// entry is extreme.
template <class Reduce>
RestoredImage trimmed_filter(const GrayImage& image, std::size_t size, ScanOrder order,
                             Reduce&& reduce) {
  std::vector<Pixel> window(size * size);
  std::vector<Pixel> kept;
  kept.reserve(window.size());
  return scan(image, order, [&](std::size_t r, std::size_t c, bool& replaced) -> Pixel {
    const Pixel center = image.at(r, c);
    if (!is_noisy(center)) return center;
    replaced = true;
    gather_window(image, r, c, size, window);
    kept.clear();
    std::uint64_t total = 0;
    for (Pixel v : window) {
      total += v;
      if (!is_noisy(v)) kept.push_back(v);
    }
    if (kept.empty()) return rounded_mean(total, window.size());
    return reduce(std::span<Pixel>(kept));
  });
}

}  // namespace detail

/// Standard median filter: every pixel becomes its window median.
inline RestoredImage apply_smf(const GrayImage& image, const FilterConfig& config,
                               ScanOrder order = ScanOrder::forward) {
  detail::require_kind(config, FilterKind::smf);
  const std::size_t size = config.window_size;
  std::vector<Pixel> window(size * size);
  return detail::scan(image, order, [&](std::size_t r, std::size_t c, bool& replaced) {
    replaced = true;
    gather_window(image, r, c, size, window);
    return detail::lower_median(window);
  });
}

/// Adaptive median filter (Hwang and Haddad).
///
/// Stage A looks for a window, growing from `window_size` to
/// `max_window_size` in steps of 2, whose median is strictly between its
/// minimum and maximum. If none exists the pixel takes the median of the
/// largest window. Stage B keeps the centre if it is itself strictly between
/// that window's minimum and maximum, otherwise substitutes the median.
/// `replaced_count` counts pixels that took a median.
inline RestoredImage apply_amf(const GrayImage& image, const FilterConfig& config,
                               ScanOrder order = ScanOrder::forward) {
  detail::require_kind(config, FilterKind::amf);
  std::vector<Pixel> window(config.max_window_size * config.max_window_size);
  return detail::scan(image, order, [&](std::size_t r, std::size_t c, bool& replaced) -> Pixel {
    const Pixel center = image.at(r, c);
    Pixel zmed = center;
    for (std::size_t s = config.window_size; s <= config.max_window_size; s += 2) {
      const std::span<Pixel> wv(window.data(), s * s);
      gather_window(image, r, c, s, wv);
      const auto [lo, hi] = std::minmax_element(wv.begin(), wv.end());
      const Pixel zmin = *lo;
      const Pixel zmax = *hi;
      zmed = detail::lower_median(wv);
      if (zmin < zmed && zmed < zmax) {
        if (zmin < center && center < zmax) return center;
        replaced = true;
        return zmed;
      }
    }
    replaced = true;
    return zmed;
  });
}

/// Decision-based unsymmetric trimmed median filter: noisy pixels take the
/// lower median of the non-extreme window entries.
inline RestoredImage apply_mdbutmf(const GrayImage& image, const FilterConfig& config,
                                   ScanOrder order = ScanOrder::forward) {
  detail::require_kind(config, FilterKind::mdbutmf);
  return detail::trimmed_filter(image, config.window_size, order,
                                [](std::span<Pixel> kept) { return detail::lower_median(kept); });
}

/// Trimmed mean filter: noisy pixels take the rounded mean of the
/// non-extreme window entries.
inline RestoredImage apply_rmf(const GrayImage& image, const FilterConfig& config,
                               ScanOrder order = ScanOrder::forward) {
  detail::require_kind(config, FilterKind::rmf);
  return detail::trimmed_filter(image, config.window_size, order, [](std::span<Pixel> kept) {
    std::uint64_t sum = 0;
    for (Pixel v : kept) sum += v;
    return detail::rounded_mean(sum, kept.size());
  });
}

inline RestoredImage apply_filter(const GrayImage& image, const FilterConfig& config,
                                  ScanOrder order = ScanOrder::forward) {
  switch (config.kind) {
    case FilterKind::smf: return apply_smf(image, config, order);
    case FilterKind::amf: return apply_amf(image, config, order);
    case FilterKind::mdbutmf: return apply_mdbutmf(image, config, order);
    case FilterKind::rmf: return apply_rmf(image, config, order);
  }
  throw std::invalid_argument("unknown filter kind");
}

}  // namespace impulse
