// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <utility>

#include "elimdeg/poly.hpp"

namespace elimdeg {

/// Shape of a bivariate polynomial whose coefficients are generic: nonzero
/// and algebraically independent. Only the support is recorded.
class PatternPoly {
 public:
  using Monomial = std::pair<int, int>;  // (x-exponent, y-exponent)

  PatternPoly() : vars_(default_vars()) {}
  explicit PatternPoly(VarNames vars) : vars_(std::move(vars)) {}
  PatternPoly(VarNames vars, std::set<Monomial> support)
      : vars_(std::move(vars)), support_(std::move(support)) {}

  const VarNames& vars() const { return vars_; }
  const std::string& var(Axis a) const { return vars_[index(a)]; }
  const std::set<Monomial>& support() const { return support_; }

  bool is_zero() const { return support_.empty(); }
  bool contains(int i, int j) const { return support_.count({i, j}) != 0; }
  void add(int i, int j) { support_.insert({i, j}); }

  Degree degree_in(Axis a) const;
  Degree total_degree() const;

  /// Exponent of `main` mapped to the nonempty set of exponents of the other
  /// variable that carry a coefficient. Absent keys are identically zero
  /// coefficients.
  std::map<int, std::set<int>> support_sets(Axis main) const;

  friend bool operator==(const PatternPoly&, const PatternPoly&) = default;

 private:
  VarNames vars_;
  std::set<Monomial> support_;
};

/// Support of a concrete polynomial. Throws DegenerateInput on zero.
PatternPoly pattern_of(const BiPoly& p);

}  // namespace elimdeg
