#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace birkhoff {

enum class ErrorKind {
  DimensionMismatch,
  NotLatinSquare,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotNormal,
  SizeGuardExceeded,
  TargetMismatch,
  NotHomomorphism,
  NotSurjective,
  InputNotLeibniz,
  InputNotLie,
  NotPerfect,
  WellDefinednessFailure,
  VarietyIdentityFailure,
  NoHomEnumeration,
  UnsupportedHomology,
  InvalidSubobject,
  MalformedInput,
  ParseError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::InputNotLeibniz: return "InputNotLeibniz";
    case ErrorKind::InputNotLie: return "InputNotLie";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::VarietyIdentityFailure: return "VarietyIdentityFailure";
    case ErrorKind::NoHomEnumeration: return "NoHomEnumeration";
    case ErrorKind::UnsupportedHomology: return "UnsupportedHomology";
    case ErrorKind::InvalidSubobject: return "InvalidSubobject";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception. `witness`
/// is a short machine-readable description of the offending data (indices,
/// vectors or dimensions), empty when there is nothing to point at.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(std::move(message)),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::string witness_;
};

}  // namespace birkhoff
