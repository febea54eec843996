#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antilin {

// Numeric values are part of the C API (see antilin.h) and must stay stable.
enum class ErrorCode : int {
  NonFinite = 1,
  DimMismatch = 2,
  NotHermitian = 3,
  NotPositive = 4,
  NotUnit = 5,
  NotIsometry = 6,
  NotOrthonormal = 7,
  FactorizationFailure = 8,
  OddParity = 9,
  MixedParity = 10,
  DimTooLarge = 11,
  NotSeparating = 12,
  ParseError = 13,
  ToleranceExceeded = 14,
  InvalidArgument = 15,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antilin
