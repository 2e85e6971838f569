#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdbound {

enum class ErrorCode {
  NotRational,
  DivisionByZero,
  NotPrime,
  NotPrimePower,
  SizeExceeded,
  ZeroElement,
  NotInGroup,
  ColumnSumMismatch,
  CountMismatch,
  SymbolicMismatch,
  UnsupportedQ,
  OrthogonalityFailure,
  NonIntegerResult,
  NotSimple,
  InsufficientQuartics,
  LadderFormat,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rdbound
