#include "antilin/error.hpp"

namespace antilin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::NotOrthonormal: return "NotOrthonormal";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::OddParity: return "OddParity";
    case ErrorCode::MixedParity: return "MixedParity";
    case ErrorCode::DimTooLarge: return "DimTooLarge";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ToleranceExceeded: return "ToleranceExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace antilin
