#pragma once

#include <stdexcept>
#include <string>

namespace fmq {

/// Malformed or inconsistent caller input (dimension mismatch, unknown id,
/// violated precondition). The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold for well-formed inputs failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fmq
