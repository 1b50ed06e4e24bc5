#include "mtreg/exactalg/errors.hpp"

namespace mtreg {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInversion: return "ZeroInversion";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::NoConvergent: return "NoConvergent";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotPIntegral: return "NotPIntegral";
    case ErrorCode::NotGaloisStable: return "NotGaloisStable";
    case ErrorCode::NotFullTorsion: return "NotFullTorsion";
    case ErrorCode::DegenerateEvaluation: return "DegenerateEvaluation";
    case ErrorCode::NotRootOfUnity: return "NotRootOfUnity";
    case ErrorCode::UnsupportedPlace: return "UnsupportedPlace";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::InconsistentPlaces: return "InconsistentPlaces";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorCode::IdealViolation: return "IdealViolation";
    case ErrorCode::TableLevelMismatch: return "TableLevelMismatch";
    case ErrorCode::NonUnitEpsilon: return "NonUnitEpsilon";
    case ErrorCode::DegenerateRegulator: return "DegenerateRegulator";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code), detail_(detail) {}

void raise(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace mtreg
