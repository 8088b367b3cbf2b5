#pragma once

#include <stdexcept>
#include <string>

namespace ftwave {

enum class ErrorKind {
  NonFinite,
  DepthExceeded,
  DomainError,
  CriticalSigma,
  BranchAbsent,
  NumericalOverflow,
  MassOutOfRange,
  DegenerateMap,
  NoEigenvalue,
  WrongSigma,
  Unbounded,
  NotConverged,
  NegativeInput,
  ZeroFunction,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is stable and meant for
/// programmatic dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ftwave
