#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Malformed permutation, pattern or basis text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Unknown statistic, filter, series, identity or check id.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A class level grew beyond the configured capacity.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(int length, std::size_t size)
      : std::runtime_error("class level n=" + std::to_string(length) +
                           " exceeds capacity (" + std::to_string(size) +
                           " members)"),
        length_(length) {}
  int length() const noexcept { return length_; }

 private:
  int length_;
};

/// Series arithmetic outside its domain: grading mismatch, non-invertible
/// constant term, invalid substitution, non-contracting fixed point.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permlab
