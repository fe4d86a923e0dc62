#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

enum class ErrorCode {
  InvalidGrid,
  NumericInput,
  Resolution,
  DomainError,
  NearBoundary,
  VanishingModulus,
  InverseUnbounded,
  NotHardy,
  DegenerateGenerator,
  ShapeMismatch,
  OptimizationFailure,
  InconsistentCrossCheck,
  UnsupportedNorm,
  NormEvaluation,
  AxiomValidation,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when the dual-norm ascent fails to converge; the best feasible
// value reached so far is still a valid lower bound and travels with the
// exception.
class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& message, double best_lower_bound);
  double best_lower_bound() const noexcept { return best_; }

 private:
  double best_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace hardy
