#pragma once

#include <stdexcept>
#include <string>

namespace cfvar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Induced or explicit metric is degenerate somewhere on the grid.
class SingularChartError : public Error {
 public:
  using Error::Error;
};

/// Operation requested in a mode it does not support (e.g. immersion-only
/// operator on an explicit-metric map, codimension != 1 for principal
/// curvatures, non-periodic domain for integration).
class UnsupportedModeError : public Error {
 public:
  using Error::Error;
};

/// Caller passed arguments that violate a precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Unknown family id, malformed config document, bad sample file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfvar
