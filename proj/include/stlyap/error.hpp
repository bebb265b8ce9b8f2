#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stlyap {

enum class ErrorKind {
  InvalidInput,
  DegreeMismatch,
  NotConnected,
  OutOfRange,
  InvalidParameters,
  EnumerationOverflow,
  OrbitOverflow,
  ThinOrUnbounded,
  NotAMember,
  NotParabolic,
  NotInVeechGroup,
  NonUnimodular,
  DegenerateForm,
  OrderMismatch,
  PathNotClosed,
  RadicalDimensionMismatch,
  NotInvariant,
  RelatorViolation,
  DivisibilityViolation,
  HyperbolicImage,
  DegreeInconsistency,
  UncoveredImageCusp,
  InconsistentSpec,
  InconsistentImages,
  UnderdeterminedImages,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::EnumerationOverflow: return "EnumerationOverflow";
    case ErrorKind::OrbitOverflow: return "OrbitOverflow";
    case ErrorKind::ThinOrUnbounded: return "ThinOrUnbounded";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotParabolic: return "NotParabolic";
    case ErrorKind::NotInVeechGroup: return "NotInVeechGroup";
    case ErrorKind::NonUnimodular: return "NonUnimodular";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::PathNotClosed: return "PathNotClosed";
    case ErrorKind::RadicalDimensionMismatch: return "RadicalDimensionMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::RelatorViolation: return "RelatorViolation";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::HyperbolicImage: return "HyperbolicImage";
    case ErrorKind::DegreeInconsistency: return "DegreeInconsistency";
    case ErrorKind::UncoveredImageCusp: return "UncoveredImageCusp";
    case ErrorKind::InconsistentSpec: return "InconsistentSpec";
    case ErrorKind::InconsistentImages: return "InconsistentImages";
    case ErrorKind::UnderdeterminedImages: return "UnderdeterminedImages";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so that front ends
/// can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace stlyap
