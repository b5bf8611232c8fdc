#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vpf {

enum class ErrorKind {
  InvalidArgument,
  SingularMatrix,
  RankDeficient,
  ClosureOverflow,
  DegenerateSeed,
  EmptyNbc,
  ZeroDenominatorFactor,
  TruncationTooLow,
  NonRationalCoefficient,
  GluingMismatch,
  NonIntegerValue,
  NegativeValue,
  UnknownChamberId,
  DatabaseFormat,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Errors caused by bad input (exit code 1) as opposed to engine bugs (exit code 2).
constexpr bool is_user_error(ErrorKind kind) {
  return kind == ErrorKind::InvalidArgument || kind == ErrorKind::UnknownChamberId ||
         kind == ErrorKind::DatabaseFormat || kind == ErrorKind::RankDeficient ||
         kind == ErrorKind::SingularMatrix;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vpf
