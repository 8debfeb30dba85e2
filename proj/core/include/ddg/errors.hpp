#pragma once

#include <stdexcept>
#include <string>

namespace ddg {

/// A generator invariant was broken (bad shapes, non-finite values, ...).
class ModelViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Invalid scenario configuration. `field()` holds the dotted path of the
/// offending key, or is empty for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A clustering solution no longer matches the window's dimension, typically
/// after the number of variables changed. Harnesses catch this to repair.
class StaleSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedExport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by Engine::advance once the tick horizon is exhausted.
class RunComplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddg
