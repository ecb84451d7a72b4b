// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "elimdeg/degree.hpp"
#include "elimdeg/error.hpp"

namespace elimdeg {

const char* to_string(DetMethod m) {
  switch (m) {
    case DetMethod::Interp: return "interp";
    case DetMethod::FractionFree: return "bareiss";
    case DetMethod::Both: return "both";
    case DetMethod::Auto: return "auto";
  }
  return "auto";
}

int SylvesterMatrix::degree_bound() const {
  int max_a = 0;
  int max_b = 0;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    int& target = r < static_cast<std::size_t>(n) ? max_a : max_b;
    for (const auto& e : entries[r]) {
      if (!e.is_zero()) target = std::max(target, e.degree().value());
    }
  }
  return n * max_a + m * max_b;
}

SylvesterMatrix sylvester(const BiPoly& f, const BiPoly& theta, Axis eliminate) {
  if (f.degree_in(eliminate) < Degree(1) || theta.degree_in(eliminate) < Degree(1)) {
    throw Error(ErrorKind::DegenerateInput,
                "both polynomials must involve " + f.var(eliminate));
  }
  const auto a = coeffs_in(f, eliminate);
  const auto b = coeffs_in(theta, eliminate);
  SylvesterMatrix s;
  s.eliminated = eliminate;
  s.m = static_cast<int>(a.size()) - 1;
  s.n = static_cast<int>(b.size()) - 1;
  const std::size_t size = a.size() + b.size() - 2;
  const UniPoly zero(f.var(other(eliminate)));
  s.entries.assign(size, std::vector<UniPoly>(size, zero));
  for (int r = 0; r < s.n; ++r) {
    for (std::size_t k = 0; k < a.size(); ++k) s.entries[r][r + k] = a[k];
  }
  for (int r = 0; r < s.m; ++r) {
    for (std::size_t k = 0; k < b.size(); ++k) s.entries[s.n + r][r + k] = b[k];
  }
  return s;
}

namespace {

// Bareiss fraction-free elimination. `div` must be exact.
template <class T, class IsZero, class Div>
T bareiss(std::vector<std::vector<T>> a, const T& one, const T& zero,
          IsZero is_zero, Div div) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a[r][k])) ++r;
      if (r == n) return zero;
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return negate ? T(-det) : det;
}

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
  return bareiss<Integer>(
      std::move(a), Integer(1), Integer(0), [](const Integer& v) { return v == 0; },
      [](const Integer& num, const Integer& den) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
      });
}

UniPoly fraction_free_determinant(const std::vector<std::vector<UniPoly>>& m,
                                  const std::string& var) {
  return bareiss<UniPoly>(
      m, UniPoly::constant(var, 1), UniPoly(var),
      [](const UniPoly& p) { return p.is_zero(); },
      [](const UniPoly& num, const UniPoly& den) { return exact_quotient(num, den); });
}

// Nodes 0, 1, -1, 2, -2, ...
std::vector<Rat> interpolation_nodes(int count) {
  std::vector<Rat> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  for (int k = 0; static_cast<int>(nodes.size()) < count; ++k) {
    nodes.emplace_back(k);
    if (k > 0 && static_cast<int>(nodes.size()) < count) nodes.emplace_back(-k);
  }
  return nodes;
}

UniPoly newton_interpolate(const std::vector<Rat>& nodes, std::vector<Rat> values,
                           const std::string& var) {
  const std::size_t n = nodes.size();
  // Divided differences in place: values[k] becomes f[x_0, ..., x_k].
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      values[k] = (values[k] - values[k - 1]) / (nodes[k] - nodes[k - level]);
    }
  }
  UniPoly p(var);
  for (std::size_t k = n; k-- > 0;) {
    p = p * UniPoly(var, {-nodes[k], Rat(1)}) + UniPoly::constant(var, values[k]);
  }
  return p;
}

UniPoly interpolation_determinant(const std::vector<std::vector<UniPoly>>& m,
                                  int degree_bound, const std::string& var) {
  const auto nodes = interpolation_nodes(degree_bound + 1);
  std::vector<Rat> values;
  values.reserve(nodes.size());
  std::vector<std::vector<Rat>> point(m.size(), std::vector<Rat>(m.size()));
  for (const Rat& x0 : nodes) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) point[i][j] = m[i][j](x0);
    }
    values.push_back(determinant(point));
  }
  return newton_interpolate(nodes, std::move(values), var);
}

}  // namespace

Rat determinant(std::vector<std::vector<Rat>> matrix) {
  // Scale each row to integers and undo the scaling afterwards.
  Integer scale = 1;
  std::vector<std::vector<Integer>> ints(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    Integer den = 1;
    for (const auto& v : matrix[i]) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
    scale *= den;
    ints[i].reserve(matrix[i].size());
    for (const auto& v : matrix[i]) {
      ints[i].push_back(Integer(v.get_num() * (den / v.get_den())));
    }
  }
  return make_rat(integer_determinant(std::move(ints)), scale);
}

UniPoly determinant(const std::vector<std::vector<UniPoly>>& matrix,
                    DetMethod method, int degree_bound) {
  std::string var = "x";
  for (const auto& row : matrix) {
    for (const auto& e : row) {
      if (!e.is_constant()) var = e.var();
    }
  }
  if (method == DetMethod::Auto) {
    method = matrix.size() <= 12 ? DetMethod::Both : DetMethod::Interp;
  }
  switch (method) {
    case DetMethod::Interp:
      return interpolation_determinant(matrix, degree_bound, var);
    case DetMethod::FractionFree:
      return fraction_free_determinant(matrix, var);
    default: {
      UniPoly a = interpolation_determinant(matrix, degree_bound, var);
      UniPoly b = fraction_free_determinant(matrix, var);
      if (!(a == b)) {
        throw Error(ErrorKind::MethodMismatch,
                    "determinant backends disagree: " + to_string(a) + " vs " +
                        to_string(b));
      }
      return a;
    }
  }
}

UniPoly resultant(const BiPoly& f, const BiPoly& theta, Axis eliminate,
                  DetMethod method) {
  const SylvesterMatrix s = sylvester(f, theta, eliminate);
  UniPoly r = determinant(s.entries, method, s.degree_bound());
  return UniPoly(f.var(other(eliminate)), r.coefficients());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BiPoly sample_instance(const PatternPoly& p, std::uint64_t seed, std::uint64_t bound) {
  if (bound < 1 || bound > (std::uint64_t{1} << 62)) {
    throw Error(ErrorKind::InvalidArgument, "coefficient bound out of range");
  }
  const std::uint64_t range = 2 * bound;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % range;

  BiPoly out(p.vars());
  const std::uint64_t base = splitmix64(seed);
  for (const auto& [i, j] : p.support()) {
    std::uint64_t h = splitmix64(splitmix64(base ^ static_cast<std::uint64_t>(i)) ^
                                 static_cast<std::uint64_t>(j));
    while (h >= limit) h = splitmix64(h);
    const std::uint64_t v = h % range;
    // [0, bound) -> [-bound, -1], [bound, 2 bound) -> [1, bound]
    Integer c;
    if (v < bound) {
      c = Integer(std::to_string(bound - v));
      c = -c;
    } else {
      c = Integer(std::to_string(v - bound + 1));
    }
    out.add_term(i, j, Rat(c));
  }
  return out;
}

VerificationResult verify_degree(const ProblemSpec& problem, Axis eliminate,
                                 int trials, std::uint64_t seed,
                                 std::uint64_t bound, DetMethod method) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (bound < 1) throw Error(ErrorKind::InvalidArgument, "coefficient bound must be >= 1");

  VerificationResult v;
  v.eliminated = eliminate;
  v.predicted = minding_degree(problem.f, problem.theta, eliminate).minding_degree;

  int agree = 0;
  for (int k = 0; k < trials; ++k) {
    const std::uint64_t id = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(k)));
    BiPoly f, theta;
    if (problem.mode == Mode::Concrete) {
      f = *problem.f_concrete;
      theta = *problem.theta_concrete;
    } else {
      f = sample_instance(problem.f, splitmix64(id), bound);
      theta = sample_instance(problem.theta, splitmix64(id + 1), bound);
    }
    const UniPoly r = resultant(f, theta, eliminate, method);
    const Degree d = r.degree();
    if (d > Degree(static_cast<int>(v.predicted))) {
      throw Error(ErrorKind::InternalInvariantViolation,
                  "observed degree " + to_string(d) + " exceeds prediction " +
                      std::to_string(v.predicted));
    }
    if (d == Degree(static_cast<int>(v.predicted))) ++agree;
    v.max_observed = std::max(v.max_observed, d);
    v.trials.push_back({id, d, r.is_zero()});
  }
  v.agreement = make_rat(agree, trials);
  return v;
}

bool order_swap_check(const BiPoly& f, const BiPoly& theta, Axis eliminate) {
  const UniPoly forward = resultant(f, theta, eliminate);
  const UniPoly backward = resultant(theta, f, eliminate);
  const std::int64_t m = f.degree_in(eliminate).value();
  const std::int64_t n = theta.degree_in(eliminate).value();
  return (m * n) % 2 == 0 ? forward == backward : forward == -backward;
}

}  // namespace elimdeg
