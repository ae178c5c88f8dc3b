#pragma once

#include <stdexcept>
#include <string>

namespace rup {

/// Input is outside an operation's domain (zero polynomial where a nonzero one
/// is required, both gcd arguments zero, ...).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A discrete-only operation got a continuous instance, or vice versa.
class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric simulation could not certify the requested tolerance.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text. `path()` names the offending JSON field, e.g.
/// "initial[2]".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace rup
