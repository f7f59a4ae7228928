#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace taut {

enum class ErrorCode {
  NotDivisible,
  NotDivisibleInBox,
  LeadingSliceNotInvertible,
  IdenticalIndices,
  OrderTooSmall,
  DegreeMismatch,
  TooLarge,
  NotClosedUnderAction,
  NonUniformDegree,
  OutOfBox,
  FractionalResidue,
  Parse,
  UnknownIdentifier,
  Arity,
  Grading,
  InvalidArgument,
  Io,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying one of the named failure modes of the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace taut
