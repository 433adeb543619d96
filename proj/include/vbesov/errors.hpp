#pragma once

#include <stdexcept>
#include <string>

namespace vbesov {

/// Raised when vectors of different dimension are combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot deliver a result at the
/// requested accuracy (cascade failure, undersampled quadrature, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vbesov
