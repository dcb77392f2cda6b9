#pragma once

#include <stdexcept>
#include <string>

namespace lcsfi {

enum class ErrorKind {
  MalformedWord,
  RankMismatch,
  NotInLayer,
  NotLieElement,
  NotInKernel,
  NotAutomorphism,
  InvalidArgument,
  WindowTooSmall,
  NotFormPreserving,
  BoundaryWordMoved,
  NonSymplectic,
  UnsupportedGenus,
  NotTorelli,
  NotInLambda3,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

// Domain error raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lcsfi
