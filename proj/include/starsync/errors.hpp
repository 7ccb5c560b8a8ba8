#pragma once

#include <stdexcept>
#include <string>

namespace starsync {

/// Invalid user input: bad configuration field, malformed file, bad CLI
/// argument. The message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Solver did not produce a usable result (non-convergence, singular factor).
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// The steady-state null space has dimension > 1 (or the probe says so).
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation completed but missed its requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& msg, double achieved, double requested)
      : std::runtime_error(msg), achieved_(achieved), requested_(requested) {}
  double achieved() const { return achieved_; }
  double requested() const { return requested_; }

 private:
  double achieved_;
  double requested_;
};

}  // namespace starsync
