#pragma once

#include <stdexcept>
#include <string>

namespace sphx {

// Mirrors the status codes of the C API (sphx.h); keep the two in sync.
enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,
  degenerate = 3,
  unbounded = 4,
  numeric = 5,
  io = 6,
  parse = 7,
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

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace sphx
