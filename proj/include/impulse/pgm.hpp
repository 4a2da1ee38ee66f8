#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "impulse/error.hpp"
#include "impulse/image.hpp"

namespace impulse {

enum class PgmMode { ascii, binary };

namespace detail {

// Cursor over a PGM byte stream. Header tokens may be separated by any
// whitespace and by `#` comments running to end of line.
class PgmCursor {
 public:
  explicit PgmCursor(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  std::string_view rest() const noexcept { return bytes_.substr(pos_); }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal. Returns false if no digit is present or the
  // value overflows `limit`.
  bool read_uint(std::uint64_t limit, std::uint64_t& value) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > limit) return false;
      ++pos_;
    }
    return pos_ > start;
  }

  bool next_is_space() const noexcept { return !at_end() && is_space(bytes_[pos_]); }
  void advance(std::size_t n) noexcept { pos_ += n; }

 private:
  static bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Decodes a P2 (plain) or P5 (raw) PGM with maxval 255.
inline GrayImage read_pgm(std::string_view bytes) {
  using Fault = FormatError::Fault;
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw FormatError(Fault::bad_magic, 0, "PGM: magic must be P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  detail::PgmCursor cur(bytes);
  cur.advance(2);
  if (!cur.at_end() && !cur.next_is_space() && cur.rest().front() != '#') {
    throw FormatError(Fault::bad_magic, 2, "PGM: magic must be followed by whitespace");
  }

  // Dimensions beyond this cannot be backed by any input we can hold.
  constexpr auto kDimLimit = static_cast<std::uint64_t>(std::numeric_limits<std::uint32_t>::max());
  std::uint64_t width = 0;
  std::uint64_t height = 0;
  std::uint64_t maxval = 0;
  if (!cur.read_uint(kDimLimit, width)) {
    throw FormatError(Fault::bad_width, cur.offset(), "PGM: missing or invalid width");
  }
  if (!cur.read_uint(kDimLimit, height)) {
    throw FormatError(Fault::bad_height, cur.offset(), "PGM: missing or invalid height");
  }
  if (width == 0 || height == 0) {
    throw FormatError(Fault::zero_dimension, cur.offset(),
                      "PGM: zero dimension " + std::to_string(width) + "x" + std::to_string(height));
  }
  const std::size_t maxval_at = (cur.skip_space_and_comments(), cur.offset());
  if (!cur.read_uint(65535, maxval) || maxval == 0) {
    throw FormatError(Fault::bad_maxval, maxval_at, "PGM: missing or invalid maxval");
  }
  if (maxval != 255) {
    throw FormatError(Fault::unsupported_maxval, maxval_at,
                      "PGM: unsupported maxval " + std::to_string(maxval) + " (only 255)");
  }
  if (!cur.next_is_space()) {
    throw FormatError(Fault::truncated, cur.offset(), "PGM: header must end with whitespace");
  }
  cur.advance(1);

  const std::uint64_t count = width * height;
  if (binary) {
    if (cur.remaining() < count) {
      throw FormatError(Fault::truncated, bytes.size(),
                        "PGM: expected " + std::to_string(count) + " pixel bytes, found " +
                            std::to_string(cur.remaining()));
    }
    const auto data = cur.rest().substr(0, count);
    std::vector<Pixel> pixels(data.begin(), data.end());
    return GrayImage(width, height, std::move(pixels));
  }

  // Every plain sample occupies at least two bytes except possibly the last.
  if (cur.remaining() + 1 < 2 * count) {
    throw FormatError(Fault::truncated, bytes.size(),
                      "PGM: stream too short for " + std::to_string(count) + " samples");
  }
  std::vector<Pixel> pixels;
  pixels.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    cur.skip_space_and_comments();
    const std::size_t at = cur.offset();
    if (cur.at_end()) {
      throw FormatError(Fault::truncated, at,
                        "PGM: sample " + std::to_string(i) + " of " + std::to_string(count) +
                            " missing");
    }
    std::uint64_t v = 0;
    if (!cur.read_uint(std::numeric_limits<std::uint32_t>::max(), v)) {
      throw FormatError(Fault::bad_sample, at, "PGM: invalid sample " + std::to_string(i));
    }
    if (v > maxval) {
      throw FormatError(Fault::sample_out_of_range, at,
                        "PGM: sample " + std::to_string(v) + " exceeds maxval");
    }
    pixels.push_back(static_cast<Pixel>(v));
  }
  return GrayImage(width, height, std::move(pixels));
}

inline std::string write_pgm(const GrayImage& image, PgmMode mode) {
  std::string out = mode == PgmMode::binary ? "P5\n" : "P2\n";
  out += std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  const auto px = image.pixels();
  if (mode == PgmMode::binary) {
    out.append(px.begin(), px.end());
    return out;
  }
  out.reserve(out.size() + px.size() * 4);
  for (std::size_t r = 0; r < image.height(); ++r) {
    for (std::size_t c = 0; c < image.width(); ++c) {
      if (c) out += ' ';
      out += std::to_string(image.at(r, c));
    }
    out += '\n';
  }
  return out;
}

// File helpers.

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return data;
}

inline void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

inline GrayImage load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

inline void save_pgm(const std::filesystem::path& path, const GrayImage& image,
                     PgmMode mode = PgmMode::binary) {
  write_file(path, write_pgm(image, mode));
}

}  // namespace impulse
