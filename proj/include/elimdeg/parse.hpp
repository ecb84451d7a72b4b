// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Problem files.
//
//   file      := defn newline defn
//   defn      := ("f" | "theta") "=" expr
//   expr      := term (("+" | "-") term)*
//   term      := factor ("*" factor)*
//   factor    := rational | "#" | "(" var "^" nat ")" | var ("^" nat)?
//   rational  := ("-")? nat ("/" nat)?
//
// `//` starts a comment that runs to the end of the line. `#` is a generic
// coefficient on one monomial and `(x^d)` is a generic polynomial of degree d
// in x, i.e. the dense support {0, ..., d}. Either token makes the whole
// problem a pattern problem.

#include <optional>
#include <string>
#include <string_view>

#include "elimdeg/pattern.hpp"
#include "elimdeg/poly.hpp"

namespace elimdeg {

enum class Mode { Concrete, Pattern };

const char* to_string(Mode mode);

struct ProblemSpec {
  Mode mode = Mode::Pattern;
  VarNames vars = default_vars();
  // Always populated; for concrete problems these are pattern_of(concrete).
  PatternPoly f;
  PatternPoly theta;
  // Only for Mode::Concrete.
  std::optional<BiPoly> f_concrete;
  std::optional<BiPoly> theta_concrete;
  // Set when concrete coefficients were absorbed into a pattern problem.
  bool mixed = false;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parses a problem file. Errors: SyntaxError (with position), MixedVariables
/// when more than two variable names occur, DegenerateInput when either
/// polynomial is zero or does not involve the eliminated variable.
ProblemSpec parse_problem(std::string_view text);

/// Canonical printer; parse_problem(print_problem(p)) == p.
std::string print_problem(const ProblemSpec& p);

ProblemSpec make_pattern_problem(PatternPoly f, PatternPoly theta);
ProblemSpec make_concrete_problem(BiPoly f, BiPoly theta);

}  // namespace elimdeg
