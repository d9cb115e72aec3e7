#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcay {

enum class ErrorCode {
  ModulusMismatch,
  ParseError,
  NonUnit,
  NTooSmall,
  IdentityInS,
  NotInverseClosed,
  DuplicateElement,
  MalformedCase,
  AsymmetricSet,
  DegreeMismatch,
  PointOutOfRange,
  NotASubgroup,
  SizeCapExceeded,
  MapDoesNotPreserveS,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Single exception type for the library; `code()` discriminates the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dcay
