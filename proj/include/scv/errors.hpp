#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace scv {

enum class ErrorKind {
  NotInvertible,
  PrimeMismatch,
  DivisionByZero,
  DenominatorNotUnit,
  InapplicablePrime,
  WrongResidueClass,
  BudgetExceeded,
  DomainError,
  PrecisionExhausted,
  ConfigInvalid,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Base class of every error raised by the toolkit. The kind is what callers
/// (and the CLI) dispatch on; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& message) : Error(K, message) {}
};

using NotInvertible = ErrorOf<ErrorKind::NotInvertible>;
using PrimeMismatch = ErrorOf<ErrorKind::PrimeMismatch>;
using DivisionByZero = ErrorOf<ErrorKind::DivisionByZero>;
using DenominatorNotUnit = ErrorOf<ErrorKind::DenominatorNotUnit>;
using InapplicablePrime = ErrorOf<ErrorKind::InapplicablePrime>;
using WrongResidueClass = ErrorOf<ErrorKind::WrongResidueClass>;
using BudgetExceeded = ErrorOf<ErrorKind::BudgetExceeded>;
using DomainError = ErrorOf<ErrorKind::DomainError>;
using PrecisionExhausted = ErrorOf<ErrorKind::PrecisionExhausted>;
using ConfigInvalid = ErrorOf<ErrorKind::ConfigInvalid>;
using IoError = ErrorOf<ErrorKind::IoError>;

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorNotUnit: return "DenominatorNotUnit";
    case ErrorKind::InapplicablePrime: return "InapplicablePrime";
    case ErrorKind::WrongResidueClass: return "WrongResidueClass";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace scv
