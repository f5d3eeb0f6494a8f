#pragma once

#include <stdexcept>
#include <string>

namespace btwist {

enum class ErrorKind {
  NonPositiveRadius,
  OutOfStrip,
  DiscriminantNonPositive,
  TwistViolation,
  NoRootInStrip,
  NoConvergence,
  StripEscape,
  NoImpact,
  GrazingImpact,
  NotInClass,
  OutOfRange,
  DegenerateDiscriminant,
  ExtensionFailed,
  InvalidArgument,
};

constexpr const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorKind::OutOfStrip: return "OutOfStrip";
    case ErrorKind::DiscriminantNonPositive: return "DiscriminantNonPositive";
    case ErrorKind::TwistViolation: return "TwistViolation";
    case ErrorKind::NoRootInStrip: return "NoRootInStrip";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::StripEscape: return "StripEscape";
    case ErrorKind::NoImpact: return "NoImpact";
    case ErrorKind::GrazingImpact: return "GrazingImpact";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorKind::ExtensionFailed: return "ExtensionFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

// Domain error carrying a machine-checkable kind. The CLI maps these to
// exit status 2 and prints the kind name verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace btwist
