#pragma once

#include <stdexcept>
#include <string>

namespace leray {

// Process exit codes. Every failure mode that can escape a pipeline stage has
// its own code so that scripts can tell them apart.
enum class ErrorCode : int {
  Ok = 0,
  Usage = 1,
  Io = 2,
  SyntaxError = 3,
  UnknownVariable = 4,
  NegativeExponent = 5,
  NoPositiveSolution = 6,
  AmbiguousWeights = 7,
  HomogeneousOnly = 8,
  InfiniteDimensional = 9,
  NotHyperbolic = 10,
  BoundViolation = 11,
  NotIsolated = 12,
  CapExceeded = 13,
  NoLatticeSolution = 14,
  ResourceLimit = 15,
  Degenerate = 16,
  CurvatureNonzero = 17,
  ZeroAfterSubstitution = 18,
  VerificationFailed = 19,
  Internal = 20,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when two values living in different polynomial rings are combined.
class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

}  // namespace leray
