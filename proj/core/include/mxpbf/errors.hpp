#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mxpbf {

/// Bad arguments: wrong dimensions, empty or non-finite input, invalid configuration.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A column (or regressor column) carries no usable spread.
class DegenerateColumnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cholesky pivot failure; carries the index of the failing pivot.
class NotPositiveDefiniteError : public std::runtime_error {
 public:
  NotPositiveDefiniteError(const std::string& what, std::size_t pivot_index)
      : std::runtime_error(what + " (pivot " + std::to_string(pivot_index) + ")"),
        pivot_index_(pivot_index) {}

  std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

/// An iterative numeric routine failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mxpbf
