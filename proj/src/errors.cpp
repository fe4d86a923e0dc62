#include "hardy/errors.hpp"

namespace hardy {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGrid: return "invalid-grid";
    case ErrorCode::NumericInput: return "numeric-input";
    case ErrorCode::Resolution: return "resolution";
    case ErrorCode::DomainError: return "domain";
    case ErrorCode::NearBoundary: return "near-boundary";
    case ErrorCode::VanishingModulus: return "vanishing-modulus";
    case ErrorCode::InverseUnbounded: return "inverse-unbounded";
    case ErrorCode::NotHardy: return "not-hardy";
    case ErrorCode::DegenerateGenerator: return "degenerate-generator";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::OptimizationFailure: return "optimization-failure";
    case ErrorCode::InconsistentCrossCheck: return "inconsistent-cross-check";
    case ErrorCode::UnsupportedNorm: return "unsupported-norm";
    case ErrorCode::NormEvaluation: return "norm-evaluation";
    case ErrorCode::AxiomValidation: return "axiom-validation";
    case ErrorCode::ParseError: return "parse";
    case ErrorCode::IoError: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string("[") + to_string(code) + "] " + message),
      code_(code) {}

OptimizationError::OptimizationError(const std::string& message,
                                     double best_lower_bound)
    : Error(ErrorCode::OptimizationFailure, message), best_(best_lower_bound) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hardy
