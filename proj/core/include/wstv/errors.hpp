#pragma once

#include <stdexcept>

namespace wstv {

/// Malformed or unsupported file content (bad magic, maxval, truncated payload).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Incompatible image/field dimensions.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values detected inside an iterative solve.
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wstv
