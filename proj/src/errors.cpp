#include "subord/errors.hpp"

namespace subord {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZeroConstantTerm: return "DivisionByZeroConstantTerm";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::ConstantTermNotZero: return "ConstantTermNotZero";
    case ErrorKind::InnerConstantTermNotZero: return "InnerConstantTermNotZero";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::InverseMapPole: return "InverseMapPole";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::NonMonotoneMargin: return "NonMonotoneMargin";
    case ErrorKind::ThresholdNotBracketed: return "ThresholdNotBracketed";
    case ErrorKind::ConstantTermMismatch: return "ConstantTermMismatch";
    case ErrorKind::NotAContraction: return "NotAContraction";
    case ErrorKind::RecursionBreakdown: return "RecursionBreakdown";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace subord
