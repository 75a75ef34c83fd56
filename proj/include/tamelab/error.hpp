#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamelab {

enum class ErrorKind {
  PrecisionMismatch,
  PrecisionOverflow,
  NonUnit,
  NonResidue,
  DomainError,
  DepthError,
  NonUnitDeterminant,
  LimitExceeded,
  WindowTooLarge,
  InsufficientPrecision,
  ZeroVector,
  RingMismatch,
  CertificateInvalid,
  TameRelationFailed,
  NotNonresidue,
  InvalidSignature,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries one of the kinds above so callers (the CLI
/// in particular) can map it without parsing messages.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tamelab
