// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace elimdeg {

enum class ErrorKind {
  DegenerateInput,
  DegenerateSharedFactor,
  SyntaxError,
  MixedVariables,
  InternalInvariantViolation,
  MethodMismatch,
  ZeroDivisor,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Location inside a problem file. Lines and columns count from 1.
struct SourcePosition {
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Error(ErrorKind kind, const std::string& what, SourcePosition pos)
      : std::runtime_error(what), kind_(kind), position_(pos) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePosition>& position() const noexcept {
    return position_;
  }

 private:
  ErrorKind kind_;
  std::optional<SourcePosition> position_;
};

}  // namespace elimdeg
