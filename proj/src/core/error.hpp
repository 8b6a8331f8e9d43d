#pragma once

#include <stdexcept>
#include <string>

namespace sepflux {

// Stable failure taxonomy. The CLI maps these onto process exit codes and
// the C API onto sfx_status values, so the numeric values are a contract.
enum class Status {
  ok = 0,
  argument = 1,
  parse_error = 2,
  invariant_violation = 3,
  hypothesis_violation = 4,
  bad_class = 5,
  internal_check = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  [[nodiscard]] Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace sepflux
