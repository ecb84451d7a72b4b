// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Newton polygon at infinity.
//
// For p = sum_j C_j(x) y^j the points (j, deg C_j) are collected and their
// upper convex hull is taken. An edge of slope s spanning `mult` units of j
// stands for `mult` roots y(x) ~ c * x^h with h = -s as x grows.

#include <span>
#include <vector>

#include "elimdeg/pattern.hpp"
#include "elimdeg/poly.hpp"

namespace elimdeg {

struct NewtonPoint {
  int j;  // exponent of the main variable
  int b;  // degree of its coefficient in the other variable

  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
};

struct HullEdge {
  int j_start;
  int j_end;
  Rat slope;

  Rat root_degree() const { return -slope; }
  int multiplicity() const { return j_end - j_start; }

  friend bool operator==(const HullEdge&, const HullEdge&) = default;
};

struct RootDegreeSummary {
  std::vector<HullEdge> edges;  // left to right, slopes strictly decreasing
  int t = 0;                    // roots that vanish identically
  int n = 0;                    // degree in the main variable
};

/// One point per present power of `main`, sorted by j.
/// Throws DegenerateInput on the zero pattern.
std::vector<NewtonPoint> newton_points(const PatternPoly& p, Axis main);

/// Upper hull of points with distinct, ascending j. Collinear points are
/// merged into one edge. A single point gives no edges.
std::vector<HullEdge> upper_hull(std::span<const NewtonPoint> points);

/// Throws DegenerateInput when p does not involve `main`.
RootDegreeSummary root_degrees(const PatternPoly& p, Axis main);

}  // namespace elimdeg
