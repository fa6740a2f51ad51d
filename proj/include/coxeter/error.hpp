#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxeter {

enum class ErrorCode {
  NotSquare,
  EmptyMatrix,
  DiagonalNotOne,
  NotSymmetric,
  OffDiagonalTooSmall,
  RankTooLarge,
  IndexOutOfRange,
  CapExceeded,
  NotSpherical,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type; `code()` is what
// callers branch on, `what()` carries the human-readable context.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace coxeter
