#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "impulse/error.hpp"
#include "impulse/image.hpp"

namespace impulse {

inline constexpr double kInfinite = std::numeric_limits<double>::infinity();
inline constexpr double kPeakSquared = 255.0 * 255.0;

struct MetricsReport {
  double mse = 0.0;
  double psnr_db = kInfinite;
  std::optional<double> ief;
};

namespace detail {

inline void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("image shapes differ: " + a.shape_string() + " vs " +
                                b.shape_string());
  }
}

inline std::uint64_t squared_error_sum(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(pa[i]) - pb[i];
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

}  // namespace detail

inline double mse(const GrayImage& reference, const GrayImage& test) {
  return static_cast<double>(detail::squared_error_sum(reference, test)) /
         static_cast<double>(reference.size());
}

/// 10 log10(255^2 / mse); infinite for a zero error.
inline double psnr_from_mse(double mse_value) {
  if (mse_value < 0.0) throw std::invalid_argument("negative MSE");
  if (mse_value == 0.0) return kInfinite;
  return 10.0 * std::log10(kPeakSquared / mse_value);
}

inline double psnr(const GrayImage& reference, const GrayImage& test) {
  return psnr_from_mse(mse(reference, test));
}

/// Image enhancement factor: squared error of the noisy image over squared
/// error of the restored one, both against the reference.
///
/// Infinite when the restoration is exact. Throws DegenerateInputError when
/// the noisy image already equals the reference, since there is no noise to
/// measure against.
inline double ief(const GrayImage& reference, const GrayImage& noisy, const GrayImage& restored) {
  const std::uint64_t before = detail::squared_error_sum(reference, noisy);
  const std::uint64_t after = detail::squared_error_sum(reference, restored);
  if (before == 0) {
    throw DegenerateInputError(after == 0 ? "IEF undefined: all three images are identical"
                                          : "IEF undefined: noisy image equals the reference");
  }
  if (after == 0) return kInfinite;
  return static_cast<double>(before) / static_cast<double>(after);
}

inline MetricsReport evaluate(const GrayImage& reference, const GrayImage& test,
                              const GrayImage* noisy = nullptr) {
  MetricsReport report;
  report.mse = mse(reference, test);
  report.psnr_db = psnr_from_mse(report.mse);
  if (noisy) report.ief = ief(reference, *noisy, test);
  return report;
}

}  // namespace impulse
