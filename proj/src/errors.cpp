#include "leray/errors.hpp"

namespace leray {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::Io: return "Io";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NoPositiveSolution: return "NoPositiveSolution";
    case ErrorCode::AmbiguousWeights: return "AmbiguousWeights";
    case ErrorCode::HomogeneousOnly: return "HomogeneousOnly";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoLatticeSolution: return "NoLatticeSolution";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CurvatureNonzero: return "CurvatureNonzero";
    case ErrorCode::ZeroAfterSubstitution: return "ZeroAfterSubstitution";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace leray
