#pragma once

#include <stdexcept>
#include <string>

namespace omit {

/// Bad configuration input: missing key, unknown unit, violated invariant.
class config_error : public std::runtime_error {
public:
  config_error(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

private:
  std::string key_;
};

/// Numerical failure: integrator divergence, singular system, degenerate ratio.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Mass inversion could not bracket a root.
class inversion_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace omit
