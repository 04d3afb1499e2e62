#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symrig {

enum class ErrorCode {
  CapExceeded,
  LengthMismatch,
  BadPermutation,
  UnknownName,
  BadParam,
  NotClosedWithinBound,
  NonOrthogonalGenerator,
  OrderBoundExceeded,
  DimensionMismatch,
  NotAnAutomorphism,
  ExplosionGuard,
  InvalidFramework,
  SamplingExhausted,
  NotAHomomorphism,
  InconsistentPropagation,
  NotRationalizable,
  ParseError,
  UnknownGroup,
  SelfLoop,
  UnsupportedDim,
  EmptyClass,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above. The CLI
// maps them onto machine-readable error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symrig
