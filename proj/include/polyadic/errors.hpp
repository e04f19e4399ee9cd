#pragma once

#include <stdexcept>
#include <string>

namespace polyadic {

/// Library error carrying a stable machine-readable code ("NotPrime",
/// "FieldMismatch", ...) next to the human message.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace polyadic
