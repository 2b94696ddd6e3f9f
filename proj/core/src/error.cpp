#include "h2vqe/error.hpp"

namespace h2vqe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::domain: return "domain";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::resource: return "resource";
    case ErrorKind::validation: return "validation";
    case ErrorKind::symmetry: return "symmetry";
    case ErrorKind::binding: return "binding";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

ConvergenceError::ConvergenceError(const std::string& message, double last_value)
    : Error(ErrorKind::convergence, message), last_value_(last_value) {}

bool is_configuration_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::configuration:
    case ErrorKind::unsupported:
    case ErrorKind::symmetry:
    case ErrorKind::io:
      return true;
    default:
      return false;
  }
}

}  // namespace h2vqe
