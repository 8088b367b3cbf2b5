#include "ftwave/error.hpp"

namespace ftwave {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::CriticalSigma: return "CriticalSigma";
    case ErrorKind::BranchAbsent: return "BranchAbsent";
    case ErrorKind::NumericalOverflow: return "NumericalOverflow";
    case ErrorKind::MassOutOfRange: return "MassOutOfRange";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::NoEigenvalue: return "NoEigenvalue";
    case ErrorKind::WrongSigma: return "WrongSigma";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace ftwave
