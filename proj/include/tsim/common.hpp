#pragma once

#include <stdexcept>
#include <string>

namespace tsim {

// error taxonomy: DimensionError for shape mismatches (message names the
// offending axis), ConfigError for bad config/CLI input (exit code 1),
// NumericalError for NaN/Inf aborts (exit code 2), ProtocolError for
// API misuse (step after done, backward twice, ...).
struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProtocolError : std::runtime_error {
  explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double d) { return d * kPi / 180.0; }

}  // namespace tsim
