#pragma once

#include <stdexcept>
#include <string>

namespace smtplace {

/// Bad or inconsistent configuration / input schema. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File-system or serialization failure. CLI exit code 3.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Optimization problem has no detectable feasible point. CLI exit code 2.
class InfeasibleError : public std::runtime_error {
public:
  InfeasibleError(const std::string& what, double worst_slack)
      : std::runtime_error(what), worst_slack_(worst_slack) {}

  /// Least-negative constraint slack seen while probing (negative = violated).
  double worst_slack() const { return worst_slack_; }

private:
  double worst_slack_;
};

}  // namespace smtplace
