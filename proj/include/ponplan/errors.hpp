// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ponplan {

/// Malformed input document (bad syntax, missing or mistyped field).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that breaks a model invariant. Carries the
/// complete list of failed checks, not just the first one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::vector<std::string>& issues)
      : std::runtime_error(join(issues)), issues_(issues) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "validation failed:";
    for (const auto& s : issues) {
      out += "\n  - " + s;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

/// Inconsistent configuration (e.g. a split ratio with no unit cost).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A plan or partial assignment references sites the model does not know.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Problem too large for the configured budget.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem or stream failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ponplan
