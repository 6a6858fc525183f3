#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadcycle {

enum class ErrorCode {
  InvalidArgument,
  InvalidMap,
  NotCubic,
  ComplexRoots,
  PoleAtExcludedPoint,
  NoCycleExists,
  BranchMismatch,
  DegenerateTriple,
  NegativeDelta,
  CriticalPoint,
  NotDegenerate,
  DivisionResidual,
  OrbitGroupingFailure,
  DegenerateFamily,
  CycleValidation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every precondition violation in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quadcycle
