#pragma once

#include <stdexcept>
#include <string>

namespace typeseq {

enum class ErrorCode {
  invalid_argument,
  parse,
  field,
  ring,
  conductor_not_found,
  inconsistency,
};

/// Every failure the library reports. `check()` names the validation that
/// rejected the input (e.g. "locality", "multiplicative-closure").
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string check, const std::string& message)
      : std::runtime_error(check.empty() ? message : check + ": " + message),
        code_(code),
        check_(std::move(check)) {}

  ErrorCode code() const { return code_; }
  const std::string& check() const { return check_; }

 private:
  ErrorCode code_;
  std::string check_;
};

}  // namespace typeseq
