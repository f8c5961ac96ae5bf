#pragma once

#include <stdexcept>
#include <string>

namespace rcft {

// Categories map one-to-one onto the status codes of the C interface.
enum class ErrorCode {
  InvalidArgument = 1,
  Validation = 2,
  NonIntegral = 3,
  Domain = 4,
  Limit = 5,
  Io = 6,
  Internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rcft
