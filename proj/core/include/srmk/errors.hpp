#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srmk {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or ownership mismatch: different towers, wrong dimensions, partition not matching a length.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Field parameters that do not describe a field (reducible modulus, composite p, singular basis).
class InvalidField : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class SamplingFailure : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NonUniqueSolution : public Error {
 public:
  using Error::Error;
};

class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON schema violations, unparsable text).
class FormatError : public Error {
 public:
  using Error::Error;
};

enum class DecodeFailureKind {
  SupportSpaceEmpty,
  SupportMismatch,
  NonUniqueSolution,
  Inconsistent,
  ResidualCheckFailed,
};

constexpr std::string_view to_string(DecodeFailureKind kind) {
  switch (kind) {
    case DecodeFailureKind::SupportSpaceEmpty: return "SupportSpaceEmpty";
    case DecodeFailureKind::SupportMismatch: return "SupportMismatch";
    case DecodeFailureKind::NonUniqueSolution: return "NonUniqueSolution";
    case DecodeFailureKind::Inconsistent: return "Inconsistent";
    case DecodeFailureKind::ResidualCheckFailed: return "ResidualCheckFailed";
  }
  return "Unknown";
}

/// Typed decoder failure. The kind names the stage that rejected the input.
class DecodeFailure : public Error {
 public:
  DecodeFailure(DecodeFailureKind kind, const std::string& detail)
      : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  DecodeFailureKind kind() const noexcept { return kind_; }

 private:
  DecodeFailureKind kind_;
};

}  // namespace srmk
