// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Degree of the eliminant of f and theta predicted from the Newton polygon of
// theta.
//
// Write f = A_0 y^m + ... + A_m and theta = B_0 y^n + ... + B_n and let the
// roots of theta grow like c_i x^(h_i). The resultant is B_0^m times the
// product of f(x, y_i), so its degree is
//
//   m * deg B_0 + sum_i k_i,   k_i = max_j (deg A_(m-j) + j * h_i),
//
// which is always an integer. Roots of theta that vanish identically (theta
// divisible by y^t) contribute t * deg A_m instead.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "elimdeg/parse.hpp"
#include "elimdeg/pattern.hpp"
#include "elimdeg/poly.hpp"

namespace elimdeg {

struct EdgeContribution {
  Rat h;             // root degree
  int multiplicity;  // number of roots with this degree
  Rat k;             // degree of f(x, c x^h)
};

struct DegreeReport {
  Axis eliminated = Axis::Y;
  int m = 0;  // degree of f in the eliminated variable
  int n = 0;  // degree of theta in the eliminated variable
  int b = 0;  // degree of theta's leading coefficient
  std::vector<EdgeContribution> edges;
  int t_theta = 0;
  Rat t_contribution;
  std::int64_t minding_degree = 0;
  std::int64_t bezout_bound = 0;
  std::optional<std::int64_t> finck_degree;
};

/// max over present j of (deg of f's coefficient of main^j) + j * h.
/// Throws DegenerateInput on the zero pattern.
Rat factor_degree(const PatternPoly& f, Axis main, const Rat& h);

/// Throws DegenerateInput if either polynomial is constant in `eliminate`,
/// DegenerateSharedFactor if both are divisible by the eliminated variable,
/// and InternalInvariantViolation if the result is not an integer in
/// [0, bezout_bound].
DegreeReport minding_degree(const PatternPoly& f, const PatternPoly& theta,
                            Axis eliminate);

/// Product of the total degrees.
std::int64_t bezout_bound(const PatternPoly& f, const PatternPoly& theta);

/// m * n' + n * m' when every coefficient of f (in the eliminated variable)
/// is present and dense of one common degree m', and likewise theta with n'.
/// Otherwise nullopt.
std::optional<std::int64_t> finck_degree(const PatternPoly& f,
                                         const PatternPoly& theta,
                                         Axis eliminate = Axis::Y);

struct GenericPair {
  PatternPoly f;
  PatternPoly theta;
};

/// Gives f's leading coefficient in y a generic constant term, and its
/// leading coefficient in x a generic y^0 term. With `include_theta` the same
/// is done to theta.
GenericPair genericize_leading(const PatternPoly& f, const PatternPoly& theta,
                               bool include_theta = false);

struct InfinityReport {
  std::int64_t d_x = 0;    // degree of the eliminant in x (y eliminated)
  std::int64_t d_y = 0;    // degree of the eliminant in y (x eliminated)
  std::int64_t d_gen = 0;  // both orders after genericization
  std::int64_t lost_x = 0;
  std::int64_t lost_y = 0;
  // Assumes every escaped solution has exactly one infinite coordinate.
  std::int64_t finite_count = 0;
  std::optional<UniPoly> gcd_lead_y_order;  // gcd(A_0, B_0), concrete only
  std::optional<UniPoly> gcd_lead_x_order;  // gcd(alpha_0, beta_0)
};

struct ConcretePair {
  BiPoly f;
  BiPoly theta;
};

InfinityReport dual_order_analysis(const PatternPoly& f, const PatternPoly& theta,
                                   const std::optional<ConcretePair>& concrete = {},
                                   bool genericize_theta = false);

InfinityReport dual_order_analysis(const ProblemSpec& problem,
                                   bool genericize_theta = false);

}  // namespace elimdeg
