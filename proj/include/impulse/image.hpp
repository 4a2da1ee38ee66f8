#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace impulse {

using Pixel = std::uint8_t;

inline constexpr Pixel kPepper = 0;
inline constexpr Pixel kSalt = 255;

/// Row-major 8-bit grayscale image; (0, 0) is the top-left pixel.
///
/// Dimensions are fixed at construction and both must be at least 1. The
/// pixel buffer always holds exactly width * height samples.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, Pixel fill = 0)
      : width_(width), height_(height) {
    check_dims(width, height);
    pixels_.assign(width * height, fill);
  }

  GrayImage(std::size_t width, std::size_t height, std::vector<Pixel> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dims(width, height);
    if (pixels_.size() != width * height) {
      throw std::invalid_argument("GrayImage: expected " + std::to_string(width * height) +
                                  " pixels, got " + std::to_string(pixels_.size()));
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  Pixel at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  Pixel& at(std::size_t row, std::size_t col) { return pixels_[row * width_ + col]; }

  std::span<const Pixel> pixels() const noexcept { return pixels_; }
  std::span<Pixel> pixels() noexcept { return pixels_; }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  std::string shape_string() const {
    return std::to_string(width_) + "x" + std::to_string(height_);
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  static void check_dims(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) {
      throw std::invalid_argument("GrayImage: dimensions must be positive");
    }
  }

  std::size_t width_;
  std::size_t height_;
  std::vector<Pixel> pixels_;
};

/// Square neighbourhood of a pixel, row-major, replicate-padded at borders.
struct Window {
  std::size_t size = 0;
  std::vector<Pixel> values;

  Pixel center_value() const { return values[values.size() / 2]; }
};

inline void check_window_size(std::size_t size) {
  if (size < 3 || size % 2 == 0) {
    throw std::invalid_argument("window size must be odd and >= 3, got " + std::to_string(size));
  }
}

/// Fills `out` (size * size entries) with the neighbourhood of (row, col).
/// Coordinates outside the image are clamped to the nearest edge pixel.
/// No validation; callers go through window_at or check sizes once up front.
inline void gather_window(const GrayImage& image, std::size_t row, std::size_t col,
                          std::size_t size, std::span<Pixel> out) {
  const auto half = static_cast<std::ptrdiff_t>(size / 2);
  const auto max_r = static_cast<std::ptrdiff_t>(image.height()) - 1;
  const auto max_c = static_cast<std::ptrdiff_t>(image.width()) - 1;
  const auto r0 = static_cast<std::ptrdiff_t>(row);
  const auto c0 = static_cast<std::ptrdiff_t>(col);
  std::size_t k = 0;
  for (std::ptrdiff_t dr = -half; dr <= half; ++dr) {
    const auto r = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(r0 + dr, 0, max_r));
    for (std::ptrdiff_t dc = -half; dc <= half; ++dc) {
      const auto c = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(c0 + dc, 0, max_c));
      out[k++] = image.at(r, c);
    }
  }
}

inline Window window_at(const GrayImage& image, std::size_t row, std::size_t col,
                        std::size_t size) {
  check_window_size(size);
  if (row >= image.height() || col >= image.width()) {
    throw std::invalid_argument("window_at: (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") outside " + image.shape_string());
  }
  Window w{size, std::vector<Pixel>(size * size)};
  gather_window(image, row, col, size, w.values);
  return w;
}

/// FNV-1a over dimensions and pixels. Used to compare images cheaply.
inline std::uint64_t digest(const GrayImage& image) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (auto dim : {image.width(), image.height()}) {
    for (int i = 0; i < 8; ++i) feed((dim >> (8 * i)) & 0xff);
  }
  for (Pixel p : image.pixels()) feed(p);
  return h;
}

}  // namespace impulse
