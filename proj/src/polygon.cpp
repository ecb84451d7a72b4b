// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/polygon.hpp"

#include <cstdint>

#include "elimdeg/error.hpp"

namespace elimdeg {

std::vector<NewtonPoint> newton_points(const PatternPoly& p, Axis main) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "empty support has no Newton points");
  }
  std::vector<NewtonPoint> pts;
  for (const auto& [j, others] : p.support_sets(main)) {
    pts.push_back({j, *others.rbegin()});
  }
  return pts;
}

std::vector<HullEdge> upper_hull(std::span<const NewtonPoint> points) {
  // Andrew's monotone chain, upper half only.
  std::vector<NewtonPoint> chain;
  for (const auto& p : points) {
    while (chain.size() >= 2) {
      const auto& o = chain[chain.size() - 2];
      const auto& a = chain.back();
      const std::int64_t cross =
          std::int64_t{a.j - o.j} * (p.b - o.b) - std::int64_t{a.b - o.b} * (p.j - o.j);
      if (cross < 0) break;
      chain.pop_back();
    }
    chain.push_back(p);
  }
  std::vector<HullEdge> edges;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    const auto& l = chain[k - 1];
    const auto& r = chain[k];
    edges.push_back({l.j, r.j, make_rat(r.b - l.b, r.j - l.j)});
  }
  return edges;
}

RootDegreeSummary root_degrees(const PatternPoly& p, Axis main) {
  const Degree n = p.degree_in(main);
  if (n < Degree(1)) {
    throw Error(ErrorKind::DegenerateInput,
                "polynomial does not involve " + p.var(main));
  }
  const auto pts = newton_points(p, main);
  RootDegreeSummary s;
  s.edges = upper_hull(pts);
  s.t = pts.front().j;
  s.n = n.value();
  return s;
}

}  // namespace elimdeg
