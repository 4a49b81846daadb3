#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigspace {

enum class ErrorCode {
  NonSquare,
  BothZero,
  DegreeTooLow,
  DuplicateAbscissa,
  InsufficientSamples,
  BadBudget,
  DuplicateLambda,
  InfeasibleConfig,
  NotStrictlyUpper,
  RankDeficient,
  MixedSizes,
  EmptyAmbient,
  SizeMismatch,
  Singular,
  NotBorelInvariant,
  DegenerateFamily,
  NotPhiStable,
  PreconditionFailed,
  DegenerateLambdas,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eigspace
