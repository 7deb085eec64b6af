#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdf {

enum class ErrorCode {
  EvenDegree,
  DegreeOutOfRange,
  InvalidModulus,
  ReduciblePolynomial,
  InvalidElement,
  ZeroInverse,
  AllZeroCoefficients,
  NotADivisor,
  ForbiddenSeed,
  DegenerateT,
  WrongResidue,
  SubfieldBlockMissing,
  InvalidInput,
  NeedsForce,
};

std::string_view to_string(ErrorCode code) noexcept;

// Precondition failures of the construction pipeline. Verification failures
// are never thrown; they are reported.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qdf
