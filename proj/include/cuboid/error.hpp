#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cuboid {

enum class ErrorCode {
  ZeroDenominator,
  DivisionByZero,
  EvenCharacteristic,
  NotPrime,
  SyntaxError,
  UnknownVariable,
  RingMismatch,
  NotHomogeneous,
  ExponentOverflow,
  LocalOrderRejected,
  GlobalOrderRejected,
  BudgetExceeded,
  NotZeroDimensional,
  ShapeFailed,
  BadPrime,
  ZeroPolynomial,
  UnknownVariety,
  StratumNotZeroDimensional,
  PointNotSingular,
  DegenerateCoefficients,
  DegreeMismatch,
  NotVanishingAtOrigin,
  NonIntegerResult,
  PointNotOnCurve,
  InvalidRank,
  MissingInput,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// The one exception type thrown by the library. Callers branch on code().
class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw MathError(code, what);
}

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::LocalOrderRejected: return "LocalOrderRejected";
    case ErrorCode::GlobalOrderRejected: return "GlobalOrderRejected";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::ShapeFailed: return "ShapeFailed";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::UnknownVariety: return "UnknownVariety";
    case ErrorCode::StratumNotZeroDimensional: return "StratumNotZeroDimensional";
    case ErrorCode::PointNotSingular: return "PointNotSingular";
    case ErrorCode::DegenerateCoefficients: return "DegenerateCoefficients";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotVanishingAtOrigin: return "NotVanishingAtOrigin";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::MissingInput: return "MissingInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cuboid
