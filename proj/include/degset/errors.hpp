#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation
/// (zero degree, empty generator set, gcd of the empty set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result that cannot be represented exactly (period overflow, a closure
/// that is not certified to be eventually periodic).
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Input data that contradicts itself: counts that violate the Weil bound,
/// component degree sets that disagree with the marked points, ...
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// A configuration the engine refuses to evaluate.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Raised for inputs that carry several independent problems at once.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out;
    for (const auto& s : issues) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

/// Textual input that does not parse.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace degset
