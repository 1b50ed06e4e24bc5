#pragma once

#include <stdexcept>
#include <string>

namespace mtreg {

enum class ErrorCode {
  ZeroInversion,
  BadExponent,
  NotReal,
  NoConvergent,
  PrecisionExhausted,
  NotPIntegral,
  NotGaloisStable,
  NotFullTorsion,
  DegenerateEvaluation,
  NotRootOfUnity,
  UnsupportedPlace,
  BadReduction,
  NoPreimage,
  InconsistentPlaces,
  ShapeError,
  LiftFailure,
  NonUnitDenominator,
  IdealViolation,
  TableLevelMismatch,
  NonUnitEpsilon,
  DegenerateRegulator,
  SchemaError,
};

const char* error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail);

}  // namespace mtreg
