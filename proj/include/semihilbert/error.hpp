#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semihilbert {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  NonFinite,
  NotPositive,
  DimensionMismatch,
  NotSemiHilbertian,
  NonConvergence,
  ZeroRank,
  NotProportional,
  HypothesisViolated,
  InvalidArgument,
  NumericalCheckFailed,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSemiHilbertian: return "NotSemiHilbertian";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroRank: return "ZeroRank";
    case ErrorKind::NotProportional: return "NotProportional";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NumericalCheckFailed: return "NumericalCheckFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (notably
/// the CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semihilbert
