// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/degree.hpp"

#include "elimdeg/error.hpp"
#include "elimdeg/polygon.hpp"

namespace elimdeg {

namespace {

void require_involves(const PatternPoly& p, Axis main, const char* name) {
  if (p.degree_in(main) < Degree(1)) {
    throw Error(ErrorKind::DegenerateInput,
                std::string(name) + " does not involve " + p.var(main));
  }
}

// Common degree of a fully present set of dense coefficients.
std::optional<int> uniform_dense_degree(const PatternPoly& p, Axis main) {
  const auto sets = p.support_sets(main);
  const int n = p.degree_in(main).value();
  if (sets.size() != static_cast<std::size_t>(n) + 1) return std::nullopt;
  std::optional<int> common;
  for (const auto& [j, others] : sets) {
    const int d = *others.rbegin();
    if (*others.begin() != 0 || others.size() != static_cast<std::size_t>(d) + 1) {
      return std::nullopt;
    }
    if (common && *common != d) return std::nullopt;
    common = d;
  }
  return common;
}

}  // namespace

Rat factor_degree(const PatternPoly& f, Axis main, const Rat& h) {
  if (f.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "factor degree of the zero polynomial");
  }
  std::optional<Rat> best;
  for (const auto& [j, others] : f.support_sets(main)) {
    Rat v = *others.rbegin() + j * h;
    if (!best || v > *best) best = v;
  }
  return *best;
}

std::int64_t bezout_bound(const PatternPoly& f, const PatternPoly& theta) {
  const Degree df = f.total_degree();
  const Degree dt = theta.total_degree();
  if (!df.is_finite() || !dt.is_finite()) return 0;
  return std::int64_t{df.value()} * dt.value();
}

std::optional<std::int64_t> finck_degree(const PatternPoly& f,
                                         const PatternPoly& theta,
                                         Axis eliminate) {
  if (f.is_zero() || theta.is_zero()) return std::nullopt;
  const auto mp = uniform_dense_degree(f, eliminate);
  const auto np = uniform_dense_degree(theta, eliminate);
  if (!mp || !np) return std::nullopt;
  const std::int64_t m = f.degree_in(eliminate).value();
  const std::int64_t n = theta.degree_in(eliminate).value();
  return m * *np + n * *mp;
}

DegreeReport minding_degree(const PatternPoly& f, const PatternPoly& theta,
                            Axis eliminate) {
  require_involves(f, eliminate, "f");
  require_involves(theta, eliminate, "theta");

  const RootDegreeSummary roots = root_degrees(theta, eliminate);
  const auto f_sets = f.support_sets(eliminate);
  const auto theta_sets = theta.support_sets(eliminate);

  DegreeReport r;
  r.eliminated = eliminate;
  r.m = f.degree_in(eliminate).value();
  r.n = roots.n;
  r.b = *theta_sets.at(roots.n).rbegin();
  r.t_theta = roots.t;

  if (roots.t > 0) {
    auto free_coeff = f_sets.find(0);
    if (free_coeff == f_sets.end()) {
      throw Error(ErrorKind::DegenerateSharedFactor,
                  "resultant vanishes identically: common factor " +
                      f.var(eliminate));
    }
    r.t_contribution = Rat(roots.t) * *free_coeff->second.rbegin();
  }

  Rat total = Rat(r.m) * r.b + r.t_contribution;
  for (const HullEdge& e : roots.edges) {
    EdgeContribution c{e.root_degree(), e.multiplicity(),
                       factor_degree(f, eliminate, e.root_degree())};
    total += c.multiplicity * c.k;
    r.edges.push_back(std::move(c));
  }

  if (!is_integer(total)) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "predicted degree " + to_string(total) + " is not an integer");
  }
  r.minding_degree = total.get_num().get_si();
  r.bezout_bound = bezout_bound(f, theta);
  if (r.minding_degree < 0 || r.minding_degree > r.bezout_bound) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "predicted degree " + std::to_string(r.minding_degree) +
                    " outside [0, " + std::to_string(r.bezout_bound) + "]");
  }
  r.finck_degree = finck_degree(f, theta, eliminate);
  return r;
}

namespace {

void genericize(PatternPoly& p) {
  if (p.is_zero()) return;
  const int m = p.degree_in(Axis::Y).value();
  const int mu = p.degree_in(Axis::X).value();
  p.add(0, m);
  p.add(mu, 0);
}

}  // namespace

GenericPair genericize_leading(const PatternPoly& f, const PatternPoly& theta,
                               bool include_theta) {
  GenericPair out{f, theta};
  genericize(out.f);
  if (include_theta) genericize(out.theta);
  return out;
}

InfinityReport dual_order_analysis(const PatternPoly& f, const PatternPoly& theta,
                                   const std::optional<ConcretePair>& concrete,
                                   bool genericize_theta) {
  InfinityReport r;
  r.d_x = minding_degree(f, theta, Axis::Y).minding_degree;
  r.d_y = minding_degree(f, theta, Axis::X).minding_degree;

  const GenericPair g = genericize_leading(f, theta, genericize_theta);
  const std::int64_t gen_x = minding_degree(g.f, g.theta, Axis::Y).minding_degree;
  const std::int64_t gen_y = minding_degree(g.f, g.theta, Axis::X).minding_degree;
  if (gen_x != gen_y) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "genericized degrees disagree: " + std::to_string(gen_x) +
                    " eliminating " + f.var(Axis::Y) + ", " + std::to_string(gen_y) +
                    " eliminating " + f.var(Axis::X));
  }
  r.d_gen = gen_x;
  r.lost_x = r.d_gen - r.d_x;
  r.lost_y = r.d_gen - r.d_y;
  if (r.lost_x < 0 || r.lost_y < 0) {
    throw Error(ErrorKind::InternalInvariantViolation,
                "genericization lowered the predicted degree");
  }
  r.finite_count = r.d_x + r.d_y - r.d_gen;

  if (concrete) {
    const auto lead = [](const BiPoly& p, Axis main) { return coeffs_in(p, main).front(); };
    r.gcd_lead_y_order = uni_gcd(lead(concrete->f, Axis::Y), lead(concrete->theta, Axis::Y));
    r.gcd_lead_x_order = uni_gcd(lead(concrete->f, Axis::X), lead(concrete->theta, Axis::X));
  }
  return r;
}

InfinityReport dual_order_analysis(const ProblemSpec& problem, bool genericize_theta) {
  std::optional<ConcretePair> concrete;
  if (problem.mode == Mode::Concrete) {
    concrete = ConcretePair{*problem.f_concrete, *problem.theta_concrete};
  }
  return dual_order_analysis(problem.f, problem.theta, concrete, genericize_theta);
}

}  // namespace elimdeg
