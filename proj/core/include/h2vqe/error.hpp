#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace h2vqe {

enum class ErrorKind {
  configuration,
  domain,
  dimension,
  resource,
  validation,
  symmetry,
  binding,
  unsupported,
  singularity,
  convergence,
  numerical,
  io,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is what
/// callers branch on (the CLI maps it to an exit status); the message is for
/// humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an iterative procedure runs out of iterations.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double last_value);

  double last_value() const noexcept { return last_value_; }

 private:
  double last_value_;
};

/// True for errors a user can fix by changing inputs.
bool is_configuration_error(ErrorKind kind);

}  // namespace h2vqe
