#pragma once

#include <stdexcept>
#include <string>

namespace ljmd {

// Bad parameters or malformed config/manifest input. CLI exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure (non-finite forces, energy blow-up). CLI exit code 2.
struct NumericalError : std::runtime_error {
  long step = -1;
  explicit NumericalError(const std::string& msg, long step_ = -1)
      : std::runtime_error(msg), step(step_) {}
};

struct StatsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Time grids of two series do not match.
struct AlignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File read/write failure. CLI exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ljmd
