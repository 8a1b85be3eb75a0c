#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace freelip {

// Domain and input errors carry a stable machine-readable code; the CLI maps
// them to exit 2. Messages embed the offending data (point names, indices,
// exact values) so a report is self-explanatory.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// A broken invariant inside the library itself (exit 3). Never expected on
// any input, valid or not.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& message)
      : std::runtime_error("internal invariant breach: " + message) {}
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace freelip
