#include "quadcycle/error.hpp"

namespace quadcycle {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::ComplexRoots: return "ComplexRoots";
    case ErrorCode::PoleAtExcludedPoint: return "PoleAtExcludedPoint";
    case ErrorCode::NoCycleExists: return "NoCycleExists";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::NegativeDelta: return "NegativeDelta";
    case ErrorCode::CriticalPoint: return "CriticalPoint";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::DivisionResidual: return "DivisionResidual";
    case ErrorCode::OrbitGroupingFailure: return "OrbitGroupingFailure";
    case ErrorCode::DegenerateFamily: return "DegenerateFamily";
    case ErrorCode::CycleValidation: return "CycleValidation";
  }
  return "Unknown";
}

}  // namespace quadcycle
