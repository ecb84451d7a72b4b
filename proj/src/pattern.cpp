// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/pattern.hpp"

#include <algorithm>

#include "elimdeg/error.hpp"

namespace elimdeg {

Degree PatternPoly::degree_in(Axis a) const {
  Degree d = Degree::neg_infinity();
  for (const auto& [i, j] : support_) {
    d = std::max(d, Degree(a == Axis::X ? i : j));
  }
  return d;
}

Degree PatternPoly::total_degree() const {
  Degree d = Degree::neg_infinity();
  for (const auto& [i, j] : support_) d = std::max(d, Degree(i + j));
  return d;
}

std::map<int, std::set<int>> PatternPoly::support_sets(Axis main) const {
  std::map<int, std::set<int>> sets;
  for (const auto& [i, j] : support_) {
    if (main == Axis::Y) {
      sets[j].insert(i);
    } else {
      sets[i].insert(j);
    }
  }
  return sets;
}

PatternPoly pattern_of(const BiPoly& p) {
  if (p.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "zero polynomial has no pattern");
  }
  PatternPoly out(p.vars());
  for (const auto& [mono, c] : p.terms()) out.add(mono.first, mono.second);
  return out;
}

}  // namespace elimdeg
