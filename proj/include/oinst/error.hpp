#pragma once

#include <stdexcept>
#include <string>

namespace oinst {

enum class ErrorKind {
  NonSquare,
  Singular,
  NotSkew,
  OddOrder,
  NotSymmetric,
  ShapeMismatch,
  BadSubset,
  RankMismatch,
  DegenerateLine,
  PreconditionN,
  HypothesisViolation,
  SchemaError,
  GenerationExhausted,
  UsageError,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::PreconditionN: return "PreconditionN";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace oinst
