#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latdiss {

enum class ErrorCode {
  Overflow,
  TooFewVertices,
  NotStrictlyConvex,
  RepeatedVertex,
  InvalidLetter,
  WordTooShort,
  IllegalStep,
  BoundExceeded,
  TooSmall,
  InvalidTriangulation,
  NotIntegerArea,
  Degenerate,
  NotUnimodular,
  OutsideTriangle,
  IsVertex,
  OddArea,
  InvalidDissection,
  PreconditionViolated,
  TheoremViolation,
  GenerationFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this one exception type; the
// code distinguishes the cases callers are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latdiss
