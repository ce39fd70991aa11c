#pragma once

#include <stdexcept>
#include <string>

namespace granred {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data (ragged CSV, bad cell, empty file).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument value (bins < 2, index out of range, k out of range).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to data in the wrong state (unlabeled rows where full
/// labels are required, coverage mismatch between partitions).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Missing or contradictory configuration (no prior probability available,
/// unknown config key). Maps to exit code 2 in the CLI.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Requested labeled split cannot be constructed from the data.
class SplitError : public Error {
 public:
  using Error::Error;
};

}  // namespace granred
