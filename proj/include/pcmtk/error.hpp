#pragma once

#include <stdexcept>
#include <string>

namespace pcmtk {

enum class ErrorCode {
  NonSquare,
  NonPositiveEntry,
  ReciprocityViolation,
  LengthMismatch,
  OrderTooSmall,
  IndexOutOfRange,
  SubsetTooSmall,
  NoConvergence,
  MissingRiEntry,
  GeneratorRejected,
  UnknownIndex,
  NotImplemented,
  UnknownSystem,
  InvalidArgument,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MissingRiEntry: return "MissingRiEntry";
    case ErrorCode::GeneratorRejected: return "GeneratorRejected";
    case ErrorCode::UnknownIndex: return "UnknownIndex";
    case ErrorCode::NotImplemented: return "NotImplemented";
    case ErrorCode::UnknownSystem: return "UnknownSystem";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the toolkit. `code()` identifies the failure class,
/// `what()` carries the details (offending indices, deviations, ...).
class PcmError : public std::runtime_error {
 public:
  PcmError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcmtk
