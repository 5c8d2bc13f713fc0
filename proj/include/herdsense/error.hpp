// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace herdsense {

enum class ErrorKind {
  parameter,   // invalid argument or configuration value
  format,      // malformed bytes or inconsistent structure
  schema,      // missing or unknown columns/fields
  ordering,    // input not sorted as required
  mapping,     // unknown label codes
  split,       // class too small to split or stratify
  state,       // missing upstream artifact or config-hash mismatch
  evaluation,  // unlabeled rows, undefined AUC
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace herdsense
