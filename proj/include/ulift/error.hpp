#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ulift {

enum class ErrorCode {
  NonCoprimeModuli,
  OutOfRange,
  FactorizationBudgetExceeded,
  NotAUnit,
  PreconditionViolated,
  NotSquare,
  DimensionMismatch,
  NotUnimodular,
  NotSymmetric,
  ShapeMismatch,
  BudgetExceeded,
  BadFactorization,
  NotSLModN,
  NoUnitEntry,
  BadLength,
  NotSymplecticModN,
  RowNotUnital,
  BadShape,
  NotPrimeModulus,
  MalformedInput,
  VerificationFailed,
  Internal,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::FactorizationBudgetExceeded:
      return "FactorizationBudgetExceeded";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadFactorization: return "BadFactorization";
    case ErrorCode::NotSLModN: return "NotSLModN";
    case ErrorCode::NoUnitEntry: return "NoUnitEntry";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::NotSymplecticModN: return "NotSymplecticModN";
    case ErrorCode::RowNotUnital: return "RowNotUnital";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotPrimeModulus: return "NotPrimeModulus";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, std::string const& what) {
  if (!cond) {
    fail(code, what);
  }
}

// Broken internal invariant; never a caller mistake.
inline void ensure(bool cond, std::string const& what) {
  if (!cond) {
    fail(ErrorCode::Internal, what);
  }
}

}  // namespace ulift
