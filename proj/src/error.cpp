#include "symrig/error.hpp"

namespace symrig {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::NotClosedWithinBound: return "NotClosedWithinBound";
    case ErrorCode::NonOrthogonalGenerator: return "NonOrthogonalGenerator";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::InvalidFramework: return "InvalidFramework";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::InconsistentPropagation: return "InconsistentPropagation";
    case ErrorCode::NotRationalizable: return "NotRationalizable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnsupportedDim: return "UnsupportedDim";
    case ErrorCode::EmptyClass: return "EmptyClass";
  }
  return "Unknown";
}

}  // namespace symrig
