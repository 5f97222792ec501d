#pragma once

#include <stdexcept>
#include <string>

namespace ebi {

enum class ErrorCode {
  invalid_params,    // (m, n) outside the supported class
  invalid_argument,  // out-of-range coordinate, malformed switch, bad option
  unsupported,       // operation undefined for these inputs (e.g. fprime with n = 2)
  cap_exhausted,     // search aborted at the state cap
  parse_error,       // malformed labeling document
  internal           // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ebi
