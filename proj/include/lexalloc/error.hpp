// Copyright 2026 The lexalloc Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lexalloc {

enum class ErrorKind {
  kInput,          // malformed or invalid input data
  kWrongPolarity,  // goods-only operation on chores or vice versa
  kUnsupported,    // valid input outside what an operation supports
  kContract,       // caller broke a precondition
  kBudget,         // exhaustive search would exceed its budget
  kInternal,       // an internal invariant failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lexalloc
