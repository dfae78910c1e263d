#pragma once

#include <stdexcept>
#include <string>

namespace gplab {

// Spec-level error conditions. Every named failure mode in the library maps
// to one of these kinds so callers (and the CLI exit-code contract) can
// distinguish config/parse problems from violated assertions.
enum class ErrorKind {
  NotMonotone,
  OutOfRange,
  InvalidBump,
  MalformedExpr,
  MalformedInput,
  NotPiecewiseLinearHere,
  FuelExhausted,
  UnboundGenerator,
  BudgetExceeded,
  IdentityFailed,
  CertificateFailed,
  DisjointnessFailed,
  BoundExceeded,
  GeneratorUnreachable,
  SubadditivityViolation,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidBump: return "InvalidBump";
    case ErrorKind::MalformedExpr: return "MalformedExpr";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::NotPiecewiseLinearHere: return "NotPiecewiseLinearHere";
    case ErrorKind::FuelExhausted: return "FuelExhausted";
    case ErrorKind::UnboundGenerator: return "UnboundGenerator";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::CertificateFailed: return "CertificateFailed";
    case ErrorKind::DisjointnessFailed: return "DisjointnessFailed";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::GeneratorUnreachable: return "GeneratorUnreachable";
    case ErrorKind::SubadditivityViolation: return "SubadditivityViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace gplab
