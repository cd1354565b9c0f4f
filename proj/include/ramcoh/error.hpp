#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramcoh {

enum class ErrorCode {
  NonUnit,
  HenselFailure,
  PrecisionExhausted,
  NotPrime,
  NotEisenstein,
  NotIrreducibleResiduePoly,
  PrecisionTooSmall,
  DegenerateTower,
  DivisionByIndistinguishableZero,
  NegativeValuation,
  NotGalois,
  NotInLevel,
  LevelMismatch,
  WrongLevel,
  LayerMismatch,
  InfiniteOrder,
  DimensionMismatch,
  NotACocycle,
  NotASubgroup,
  NotEquivariant,
  NotAModule,
  BudgetExceeded,
  NoStabilization,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is raised as this type; callers
/// branch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::HenselFailure: return "HenselFailure";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotEisenstein: return "NotEisenstein";
    case ErrorCode::NotIrreducibleResiduePoly: return "NotIrreducibleResiduePoly";
    case ErrorCode::PrecisionTooSmall: return "PrecisionTooSmall";
    case ErrorCode::DegenerateTower: return "DegenerateTower";
    case ErrorCode::DivisionByIndistinguishableZero: return "DivisionByIndistinguishableZero";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::NotInLevel: return "NotInLevel";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::WrongLevel: return "WrongLevel";
    case ErrorCode::LayerMismatch: return "LayerMismatch";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotAModule: return "NotAModule";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace ramcoh
