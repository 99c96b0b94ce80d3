#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subord {

enum class ErrorKind {
  DivisionByZeroConstantTerm,
  ConstantTermNotOne,
  ConstantTermNotZero,
  InnerConstantTermNotZero,
  SingularPoint,
  InverseMapPole,
  InvalidParameters,
  InfeasibleParameters,
  NonMonotoneMargin,
  ThresholdNotBracketed,
  ConstantTermMismatch,
  NotAContraction,
  RecursionBreakdown,
  TruncationInsufficient,
  NotApplicable,
  InvalidConfig,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace subord
