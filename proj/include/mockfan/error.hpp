#pragma once

#include <stdexcept>
#include <string>

namespace mockfan {

// Base class for every error raised by the engine. `code()` is a stable
// machine-readable tag printed by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Caller supplied data violating a documented precondition.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message, std::string code = "E_INPUT")
      : Error(std::move(code), message) {}
};

// An internal invariant failed; indicates a bug rather than bad input.
class Inconsistency : public Error {
 public:
  explicit Inconsistency(const std::string& message,
                         std::string code = "E_INCONSISTENT")
      : Error(std::move(code), message) {}
};

}  // namespace mockfan
