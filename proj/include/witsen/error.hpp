#pragma once

#include <stdexcept>
#include <string>

namespace witsen {

enum class ErrorKind {
  EmptySupport,
  NotNormalized,
  DomainMismatch,
  EmptyEdgeSet,
  TooLarge,
  ImproperColoring,
  CostTooHigh,
  BudgetExceeded,
  InvalidArgument,
  Parse,
  Internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::CostTooHigh: return "CostTooHigh";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace witsen
