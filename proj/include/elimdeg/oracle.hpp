// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Exact resultants through the Sylvester matrix, random instances of
// patterns, and empirical checks of predicted degrees.

#include <cstdint>
#include <vector>

#include "elimdeg/parse.hpp"
#include "elimdeg/pattern.hpp"
#include "elimdeg/poly.hpp"

namespace elimdeg {

struct SylvesterMatrix {
  Axis eliminated = Axis::Y;
  int m = 0;  // degree of f in the eliminated variable
  int n = 0;  // degree of theta
  // (m + n) x (m + n). The first n rows hold shifted coefficients of f, the
  // last m rows shifted coefficients of theta, highest power first.
  std::vector<std::vector<UniPoly>> entries;

  std::size_t size() const { return entries.size(); }

  /// n * max deg(A_j) + m * max deg(B_j); bounds the determinant's degree.
  int degree_bound() const;
};

/// Throws DegenerateInput when either polynomial is constant in `eliminate`.
SylvesterMatrix sylvester(const BiPoly& f, const BiPoly& theta, Axis eliminate);

enum class DetMethod {
  Interp,        // evaluate at integer nodes, Bareiss per node, interpolate
  FractionFree,  // Bareiss directly over polynomial entries
  Both,          // run both; MethodMismatch if they differ
  Auto,          // Both up to 12 x 12, Interp beyond
};

const char* to_string(DetMethod m);

/// Determinant of a square matrix of polynomials.
UniPoly determinant(const std::vector<std::vector<UniPoly>>& matrix,
                    DetMethod method, int degree_bound);

/// Exact determinant of a rational matrix (fraction-free elimination).
Rat determinant(std::vector<std::vector<Rat>> matrix);

/// Res(f, theta) with respect to `eliminate`, as a polynomial in the other
/// variable.
UniPoly resultant(const BiPoly& f, const BiPoly& theta, Axis eliminate,
                  DetMethod method = DetMethod::Auto);

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Integer coefficients drawn uniformly from [-bound, bound] \ {0}, keyed by
/// (seed, i, j) so the draw does not depend on iteration order.
/// Throws InvalidArgument when bound < 1.
BiPoly sample_instance(const PatternPoly& p, std::uint64_t seed, std::uint64_t bound);

struct Trial {
  std::uint64_t id;
  Degree observed;
  bool zero;
};

struct VerificationResult {
  Axis eliminated = Axis::Y;
  std::int64_t predicted = 0;
  std::vector<Trial> trials;
  Rat agreement;
  Degree max_observed = Degree::neg_infinity();
};

/// Pattern problems are instantiated per trial; concrete problems are used
/// as given in every trial. Throws InternalInvariantViolation if a resultant
/// exceeds the prediction.
VerificationResult verify_degree(const ProblemSpec& problem, Axis eliminate,
                                 int trials, std::uint64_t seed,
                                 std::uint64_t bound,
                                 DetMethod method = DetMethod::Auto);

/// Res(f, theta) == (-1)^(m n) Res(theta, f).
bool order_swap_check(const BiPoly& f, const BiPoly& theta, Axis eliminate);

}  // namespace elimdeg
