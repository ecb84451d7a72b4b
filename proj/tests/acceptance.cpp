// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "elimdeg/degree.hpp"
#include "elimdeg/error.hpp"
#include "elimdeg/oracle.hpp"
#include "elimdeg/parse.hpp"
#include "test_support.hpp"

using namespace elimdeg;

namespace {

const char* kExample1 =
    "f = (x^2)*y^4 + (x^2)*y^3 + (x^4)*y^2 + (x^5)*y + (x^5)\n"
    "theta = (x^8)*y^5 + (x^6)*y^4 + (x^9)*y^3 + (x^4)*y^2 + (x^3)*y + (x^4)\n";

const char* kExample2 =
    "f = #*y^4 + #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2 + #*x^3\n"
    "theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4\n";

const char* kExample2Degenerate =
    "f = #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2\n"
    "theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4\n";

const char* kExample2Concrete =
    "f = 2*x^2*y^4 + 3*y^2 - x*y^2 + 5*x^3*y + 7 - 2*x^2\n"
    "theta = 3*x^5*y^2 + y - 4*x^2*y + 2 + 5*x^4\n";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed checks of one criterion.
struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failed = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = seconds_since(t0);
  std::printf("%s  %d  %s  [%.3f s]  %s\n", o.pass ? "PASS" : "FAIL", id, title, dt,
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failed;
}

Outcome finish(Checker& c, const std::string& summary) {
  if (c.failures.empty()) return {true, summary};
  std::string d = summary + " | " + std::to_string(c.failures.size()) + " failed check(s): ";
  for (std::size_t k = 0; k < c.failures.size() && k < 5; ++k) {
    d += (k ? "; " : "") + c.failures[k];
  }
  return {false, d};
}

Outcome example1_regression() {
  Checker c;
  const auto t0 = Clock::now();
  const ProblemSpec p = parse_problem(kExample1);
  const DegreeReport r = minding_degree(p.f, p.theta, Axis::Y);
  const double dt = seconds_since(t0);
  c.equal(r.minding_degree, 58, "minding_degree");
  c.equal(r.bezout_bound, 78, "bezout_bound");
  c.equal(r.b, 8, "b");
  c.equal(r.m, 4, "m");
  c.equal(r.edges.size(), 2u, "edge count");
  if (r.edges.size() == 2) {
    c.equal(r.edges[0].h, make_rat(-5, 3), "h of first edge");
    c.equal(r.edges[0].multiplicity, 3, "multiplicity of h = -5/3");
    c.equal(r.edges[0].k, Rat(5), "k at h = -5/3");
    c.equal(r.edges[1].h, make_rat(1, 2), "h of second edge");
    c.equal(r.edges[1].multiplicity, 2, "multiplicity of h = 1/2");
    c.equal(r.edges[1].k, make_rat(11, 2), "k at h = 1/2");
  }
  c.expect(dt < 0.1, "runtime " + std::to_string(dt) + " s exceeds 0.1 s");
  return finish(c, "degree " + std::to_string(r.minding_degree) + ", bezout " +
                       std::to_string(r.bezout_bound) + ", analysis " +
                       std::to_string(dt * 1000) + " ms");
}

Outcome example1_oracle() {
  Checker c;
  const auto t0 = Clock::now();
  const ProblemSpec p = parse_problem(kExample1);
  const VerificationResult v = verify_degree(p, Axis::Y, 20, 0, 1000000);
  const double dt = seconds_since(t0);
  c.equal(v.predicted, 58, "predicted");
  c.equal(v.trials.size(), 20u, "trial count");
  c.expect(v.agreement >= make_rat(95, 100), "agreement " + to_string(v.agreement));
  c.expect(v.max_observed <= Degree(58), "observed above 58");
  c.expect(dt < 30, "runtime " + std::to_string(dt) + " s exceeds 30 s");
  return finish(c, "agreement " + to_string(v.agreement) + ", max observed " +
                       to_string(v.max_observed));
}

Outcome example2_regression() {
  Checker c;
  const auto t0 = Clock::now();
  const ProblemSpec g = parse_problem(kExample2);
  c.equal(minding_degree(g.f, g.theta, Axis::Y).minding_degree, 26, "generic, y eliminated");
  c.equal(minding_degree(g.f, g.theta, Axis::X).minding_degree, 26, "generic, x eliminated");

  const ProblemSpec d = parse_problem(kExample2Degenerate);
  c.equal(minding_degree(d.f, d.theta, Axis::Y).minding_degree, 25, "a = l = 0, y eliminated");
  c.equal(minding_degree(d.f, d.theta, Axis::X).minding_degree, 24, "a = l = 0, x eliminated");
  const InfinityReport r = dual_order_analysis(d);
  c.equal(r.d_gen, 26, "D_gen");
  c.equal(r.lost_x, 1, "lost_x");
  c.equal(r.lost_y, 2, "lost_y");
  c.equal(r.finite_count, 23, "finite_count");

  const ProblemSpec k = parse_problem(kExample2Concrete);
  const InfinityReport rc = dual_order_analysis(k);
  const UniPoly x2 = testing::upoly({0, 0, 1}, "x");
  const UniPoly y1 = testing::upoly({0, 1}, "y");
  c.expect(rc.gcd_lead_y_order && *rc.gcd_lead_y_order == x2, "gcd(A_0, B_0) is not x^2");
  c.expect(rc.gcd_lead_x_order && *rc.gcd_lead_x_order == y1, "gcd(alpha_0, beta_0) is not y");
  const UniPoly res_x = resultant(*k.f_concrete, *k.theta_concrete, Axis::Y);
  const UniPoly res_y = resultant(*k.f_concrete, *k.theta_concrete, Axis::X);
  c.expect(!res_x.is_zero() && uni_divides(x2, res_x), "resultant in x not divisible by x^2");
  c.expect(!res_y.is_zero() && uni_divides(y1, res_y), "resultant in y not divisible by y");
  const double dt = seconds_since(t0);
  c.expect(dt < 5, "runtime " + std::to_string(dt) + " s exceeds 5 s");
  return finish(c, "D_x " + std::to_string(r.d_x) + ", D_y " + std::to_string(r.d_y) +
                       ", finite " + std::to_string(r.finite_count) +
                       ", concrete resultant degrees " + to_string(res_x.degree()) + "/" +
                       to_string(res_y.degree()));
}

Outcome uniform_degree_consistency() {
  Checker c;
  testing::Random rnd(4001);
  const int cases = 300;
  for (int k = 0; k < cases; ++k) {
    const int m = rnd.uniform(1, 4), n = rnd.uniform(1, 4);
    const int mp = rnd.uniform(0, 4), np = rnd.uniform(0, 4);
    const PatternPoly f = rnd.dense_uniform(m, mp);
    const PatternPoly t = rnd.dense_uniform(n, np);
    const DegreeReport r = minding_degree(f, t, Axis::Y);
    const std::int64_t want = m * np + n * mp;
    const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " m'=" + std::to_string(mp) + " n'=" + std::to_string(np);
    c.expect(r.finck_degree == want, tag + ": finck mismatch");
    c.equal(r.minding_degree, want, tag + ": minding");
  }
  return finish(c, std::to_string(cases) + " dense patterns");
}

Outcome integrality_and_bound() {
  Checker c;
  testing::Random rnd(5001);
  int checked = 0, shared = 0;
  while (checked < 1200) {
    PatternPoly f = rnd.sparse_pattern(rnd.uniform(1, 7), rnd.uniform(0, 9));
    PatternPoly t = rnd.sparse_pattern(rnd.uniform(1, 7), rnd.uniform(0, 9));
    try {
      const DegreeReport r = minding_degree(f, t, Axis::Y);
      Rat total = Rat(r.m) * r.b + r.t_contribution;
      for (const auto& e : r.edges) total += e.multiplicity * e.k;
      c.expect(is_integer(total) && total == r.minding_degree, "non-integral total");
      c.expect(r.minding_degree <= r.bezout_bound, "degree above Bezout bound");
      c.expect(r.minding_degree >= 0, "negative degree");
      ++checked;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateSharedFactor) {
        c.expect(false, std::string(to_string(e.kind())) + ": " + e.what());
        ++checked;
      } else {
        ++shared;
      }
    }
  }
  return finish(c, std::to_string(checked) + " sparse patterns (" + std::to_string(shared) +
                       " shared-factor patterns skipped)");
}

Outcome oracle_equivalence() {
  Checker c;
  const auto t0 = Clock::now();
  testing::Random rnd(6001);
  const int patterns = 220, per_pattern = 2;
  int instances = 0, exact = 0, above = 0, mismatched = 0, swap_failed = 0;
  int generated = 0;
  while (generated < patterns) {
    PatternPoly f = rnd.sparse_pattern(rnd.uniform(1, 3), 3, 0.5);
    PatternPoly t = rnd.sparse_pattern(rnd.uniform(1, 3), 3, 0.5);
    std::int64_t predicted;
    try {
      predicted = minding_degree(f, t, Axis::Y).minding_degree;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateSharedFactor) continue;
      throw;
    }
    ++generated;
    for (int s = 0; s < per_pattern; ++s) {
      const std::uint64_t seed = splitmix64(generated * 1000003ull + s);
      const BiPoly fi = sample_instance(f, splitmix64(seed), 1000000);
      const BiPoly ti = sample_instance(t, splitmix64(seed + 1), 1000000);
      const SylvesterMatrix sm = sylvester(fi, ti, Axis::Y);
      const UniPoly a = determinant(sm.entries, DetMethod::Interp, sm.degree_bound());
      const UniPoly b = determinant(sm.entries, DetMethod::FractionFree, sm.degree_bound());
      ++instances;
      if (!(a == b)) ++mismatched;
      if (!order_swap_check(fi, ti, Axis::Y)) ++swap_failed;
      const Degree d = a.degree();
      if (d == Degree(static_cast<int>(predicted))) ++exact;
      if (d > Degree(static_cast<int>(predicted))) ++above;
    }
  }
  const double dt = seconds_since(t0);
  const Rat fraction = make_rat(exact, instances);
  c.expect(fraction >= make_rat(95, 100), "agreement " + to_string(fraction));
  c.equal(above, 0, "instances above prediction");
  c.equal(mismatched, 0, "backend mismatches");
  c.equal(swap_failed, 0, "order swap failures");
  c.expect(dt < 120, "runtime " + std::to_string(dt) + " s exceeds 120 s");
  return finish(c, std::to_string(generated) + " patterns, " + std::to_string(instances) +
                       " instances, exact " + std::to_string(exact) + " (" +
                       to_string(fraction) + ")");
}

Outcome parser_round_trip() {
  Checker c;
  testing::Random rnd(7001);
  const VarNames names[] = {{"x", "y"}, {"u", "v"}, {"p", "q"}};
  int round_trips = 0;
  std::vector<std::string> corpus;
  for (Mode mode : {Mode::Concrete, Mode::Pattern}) {
    for (int k = 0; k < 500; ++k) {
      const ProblemSpec spec = rnd.problem(mode, names[k % 3]);
      const std::string text = print_problem(spec);
      corpus.push_back(text);
      try {
        c.expect(parse_problem(text) == spec, "round trip differs:\n" + text);
      } catch (const Error& e) {
        c.expect(false, std::string("canonical text rejected: ") + e.what());
      }
      ++round_trips;
    }
  }

  // Malformed input: mutate canonical texts byte-wise.
  const std::string alphabet = "xyz#^*+-/()0123456789 \n=ft@.";
  int malformed = 0, syntax = 0;
  for (int k = 0; k < 2000; ++k) {
    std::string text = corpus[rnd.uniform(0, corpus.size() - 1)];
    const int edits = rnd.uniform(1, 4);
    for (int e = 0; e < edits && !text.empty(); ++e) {
      const std::size_t at = rnd.uniform(0, text.size() - 1);
      switch (rnd.uniform(0, 2)) {
        case 0: text.erase(at, 1); break;
        case 1: text.insert(at, 1, alphabet[rnd.uniform(0, alphabet.size() - 1)]); break;
        default: text[at] = static_cast<char>(rnd.uniform(1, 255)); break;
      }
    }
    ++malformed;
    try {
      parse_problem(text);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SyntaxError) {
        ++syntax;
        c.expect(e.position().has_value(), std::string("no position: ") + e.what());
      }
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
  }
  return finish(c, std::to_string(round_trips) + " round trips, " +
                       std::to_string(malformed) + " mutated inputs (" +
                       std::to_string(syntax) + " syntax errors, all positioned)");
}

}  // namespace

int main() {
  run(1, "first example: exact degree report", example1_regression);
  run(2, "first example: oracle, 20 trials, bound 10^6", example1_oracle);
  run(3, "second example: both orders, infinity, gcds", example2_regression);
  run(4, "dense uniform patterns follow m*n' + n*m'", uniform_degree_consistency);
  run(5, "sparse patterns: integral and within the Bezout bound", integrality_and_bound);
  run(6, "oracle equivalence at small scale", oracle_equivalence);
  run(7, "parser round trip and malformed input", parser_round_trip);
  std::printf("%s: %d of 7 criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
  return g_failed ? 1 : 0;
}
