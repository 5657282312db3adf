#pragma once

#include <stdexcept>
#include <string>

namespace aa {

enum class ErrorKind {
  InvalidParams,
  DimensionMismatch,
  NonHermitianInput,
  NonUnitaryInput,
  NonHermitianSegment,
  NotBlockDiagonal,
  MixedAxes,
  NonClosingFrame,
  NotCyclic,
  MismatchedTrajectory,
  OpenPath,
  DegenerateStep,
  InvalidDensity,
  NotXDiagonal,
  IncompatibleAccounting,
};

const char* error_kind_name(ErrorKind k);

// Validation errors map to CLI exit code 1, everything else (numerical
// failures) to exit code 2.
inline bool is_validation_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParams:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::MixedAxes:
    case ErrorKind::IncompatibleAccounting:
      return true;
    default:
      return false;
  }
}

class SimError : public std::runtime_error {
 public:
  SimError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw SimError(kind, what);
}

}  // namespace aa
