#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace impulse {

// Contract violations (bad window size, mismatched shapes, wrong filter kind)
// are reported as std::invalid_argument. The types below cover input that is
// well-typed but unusable.

/// Malformed or unsupported PGM data.
class FormatError : public std::runtime_error {
 public:
  enum class Fault {
    bad_magic,
    bad_width,
    bad_height,
    zero_dimension,
    bad_maxval,
    unsupported_maxval,
    truncated,
    bad_sample,
    sample_out_of_range,
  };

  FormatError(Fault fault, std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        fault_(fault),
        offset_(offset) {}

  Fault fault() const noexcept { return fault_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Fault fault_;
  std::size_t offset_;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inputs are valid but the requested quantity is undefined for them
/// (IEF with nothing to enhance, a plot with no finite points).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace impulse
