// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/error.hpp"

namespace elimdeg {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DegenerateSharedFactor: return "DegenerateSharedFactor";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MixedVariables: return "MixedVariables";
    case ErrorKind::InternalInvariantViolation:
      return "InternalInvariantViolation";
    case ErrorKind::MethodMismatch: return "MethodMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace elimdeg
