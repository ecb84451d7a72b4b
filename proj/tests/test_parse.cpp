// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "elimdeg/degree.hpp"
#include "elimdeg/error.hpp"
#include "elimdeg/oracle.hpp"
#include "elimdeg/parse.hpp"
#include "elimdeg/report.hpp"
#include "test_support.hpp"

using namespace elimdeg;

namespace {

const char* kExample1 =
    "f = (x^2)*y^4 + (x^2)*y^3 + (x^4)*y^2 + (x^5)*y + (x^5)\n"
    "theta = (x^8)*y^5 + (x^6)*y^4 + (x^9)*y^3 + (x^4)*y^2 + (x^3)*y + (x^4)";

const char* kExample2Degenerate =
    "f = #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2\n"
    "theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4\n";

std::set<int> range(int lo, int hi) {
  std::set<int> s;
  for (int k = lo; k <= hi; ++k) s.insert(k);
  return s;
}

ErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parsed: " << text);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("dense pattern tokens of the first example") {
  const ProblemSpec p = parse_problem(kExample1);
  CHECK(p.mode == Mode::Pattern);
  CHECK_FALSE(p.mixed);
  const auto sets = p.theta.support_sets(Axis::Y);
  REQUIRE(sets.size() == 6);
  CHECK(sets.at(5) == range(0, 8));
  CHECK(sets.at(4) == range(0, 6));
  CHECK(sets.at(3) == range(0, 9));
  CHECK(sets.at(2) == range(0, 4));
  CHECK(sets.at(1) == range(0, 3));
  CHECK(sets.at(0) == range(0, 4));
  CHECK(p.f.degree_in(Axis::Y) == Degree(4));
}

TEST_CASE("concrete problem") {
  const ProblemSpec p = parse_problem("f = y - x\ntheta = y + x");
  CHECK(p.mode == Mode::Concrete);
  REQUIRE(p.f_concrete);
  CHECK(p.f_concrete->coefficient(0, 1) == 1);
  CHECK(p.f_concrete->coefficient(1, 0) == -1);
  CHECK(p.theta_concrete->coefficient(1, 0) == 1);
}

TEST_CASE("generic monomials of the second example") {
  const ProblemSpec p = parse_problem(
      "f = #*y^4 + #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2 + #*x^3\n"
      "theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4");
  const auto sets = p.f.support_sets(Axis::Y);
  CHECK(sets.at(4) == std::set<int>{0, 2});
  CHECK(sets.at(2) == std::set<int>{0, 1});
  CHECK(sets.at(1) == std::set<int>{3});
  CHECK(sets.at(0) == std::set<int>{0, 2, 3});
  CHECK(sets.size() == 4);
}

TEST_CASE("comments, blank lines, definition order, rationals") {
  const ProblemSpec p = parse_problem(
      "// leading comment\n\n"
      "theta = 3/6*y^2 - -2*x   // trailing\n"
      "\n"
      "f = -y + 1\n");
  REQUIRE(p.mode == Mode::Concrete);
  CHECK(p.theta_concrete->coefficient(0, 2) == make_rat(1, 2));
  CHECK(p.theta_concrete->coefficient(1, 0) == 2);
  CHECK(p.f_concrete->coefficient(0, 1) == -1);
}

TEST_CASE("mixed files are pattern problems with a flag") {
  const ProblemSpec p = parse_problem("f = #*y^2 + 3*x\ntheta = (x^2)*y + 5");
  CHECK(p.mode == Mode::Pattern);
  CHECK(p.mixed);
  CHECK(p.f.contains(1, 0));
  CHECK(p.theta.contains(0, 0));
}

TEST_CASE("variable roles") {
  CHECK(parse_problem("f = s*t + 1\ntheta = t^2 - s").vars == VarNames{"s", "t"});
  CHECK(parse_problem("f = u + 1\ntheta = u^2 + 2").vars == VarNames{"x", "u"});
  CHECK(parse_problem("f = y*z + 1\ntheta = y^2 + z").vars == VarNames{"z", "y"});
  CHECK(parse_error_kind("f = x*y*z\ntheta = y") == ErrorKind::MixedVariables);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_problem("f = x*y +\ntheta = y");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    REQUIRE(e.position());
    CHECK(e.position()->line == 1);
    CHECK(e.position()->column == 10);
  }
  CHECK(parse_error_kind("f = x y\ntheta = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = x^-1*y\ntheta = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = 1/0*y\ntheta = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = y\nf = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = y\ntheta = y\ntheta = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("g = y\ntheta = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = (x)*y\ntheta = y") == ErrorKind::SyntaxError);
  CHECK(parse_error_kind("f = y\ntheta = y @") == ErrorKind::SyntaxError);
}

TEST_CASE("degenerate inputs") {
  CHECK(parse_error_kind("f = x + 1\ntheta = y") == ErrorKind::DegenerateInput);
  CHECK(parse_error_kind("f = y - y\ntheta = y") == ErrorKind::DegenerateInput);
  CHECK(parse_error_kind("f = (x^3)\ntheta = #*y") == ErrorKind::DegenerateInput);
}

TEST_CASE("pattern_of") {
  const auto p = pattern_of(*parse_problem("f = y - x\ntheta = y").f_concrete);
  CHECK(p.support_sets(Axis::Y) == std::map<int, std::set<int>>{{1, {0}}, {0, {1}}});
  const auto q = pattern_of(*parse_problem("f = x^2*y^4 + y^2\ntheta = y").f_concrete);
  CHECK(q.support_sets(Axis::Y) == std::map<int, std::set<int>>{{4, {2}}, {2, {0}}});
  CHECK_THROWS_AS(pattern_of(BiPoly()), Error);
}

TEST_CASE("pattern_of inverts sample_instance") {
  const ProblemSpec p = parse_problem(kExample1);
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    CHECK(pattern_of(sample_instance(p.theta, seed, 1000000)) == p.theta);
    CHECK(pattern_of(sample_instance(p.f, seed, 1)) == p.f);
  }
}

TEST_CASE("JSON report of the first example") {
  const ProblemSpec p = parse_problem(kExample1);
  const DegreeReport r = minding_degree(p.f, p.theta, Axis::Y);
  const std::string json = render_report(r, p.mode, p.vars, Format::Json);
  CHECK(json.find("\"minding_degree\": 58") != std::string::npos);
  CHECK(json.find("\"bezout_bound\": 78") != std::string::npos);
  CHECK(json.find("\"h\": \"1/2\"") != std::string::npos);
  CHECK(json.find("\"finck_degree\": null") != std::string::npos);

  // Canonical: parse and re-render is byte-identical.
  CHECK(render_json(nlohmann::json::parse(json)) == json);
  // No floating-point values anywhere.
  auto doc = nlohmann::json::parse(json);
  doc.erase("tool_version");
  CHECK(doc.dump().find('.') == std::string::npos);
}

TEST_CASE("text report of the degenerate second example") {
  const ProblemSpec p = parse_problem(kExample2Degenerate);
  const std::string text =
      render_report(dual_order_analysis(p), p.mode, p.vars, Format::Text);
  CHECK(text.find("finite solutions: 23\n") != std::string::npos);
  const std::string json =
      render_report(dual_order_analysis(p), p.mode, p.vars, Format::Json);
  CHECK(render_json(nlohmann::json::parse(json)) == json);
}

TEST_CASE("large integers become strings in JSON") {
  CHECK(rat_to_json(Rat(7)) == nlohmann::json(7));
  CHECK(rat_to_json(make_rat(-7, 3)) == nlohmann::json("-7/3"));
  const Rat big(Integer("123456789012345678901234567890"));
  CHECK(rat_to_json(big) == nlohmann::json("123456789012345678901234567890"));
}

TEST_CASE("property: canonical print then parse is the identity") {
  testing::Random rnd(2026);
  const VarNames names[] = {{"x", "y"}, {"s", "t"}, {"a", "b"}};
  for (int trial = 0; trial < 500; ++trial) {
    const VarNames& vars = names[trial % 3];
    const ProblemSpec spec = rnd.problem(trial % 2 ? Mode::Pattern : Mode::Concrete, vars);
    const std::string text = print_problem(spec);
    INFO(text);
    CHECK(parse_problem(text) == spec);
  }
}

TEST_CASE("property: malformed input yields SyntaxError with a position") {
  testing::Random rnd(5);
  const std::vector<std::string> pieces = {
      "f", "theta", "=", "x", "y", "^", "2", "*", "+", "-", "/", "3", "#",
      "(", ")", "(x^2)", "\n", " ", "//c\n", "0", "z", "12/7"};
  int syntax = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const int len = rnd.uniform(0, 20);
    for (int k = 0; k < len; ++k) text += pieces[rnd.uniform(0, pieces.size() - 1)];
    if (rnd.coin(0.1)) text += static_cast<char>(rnd.uniform(1, 255));
    try {
      parse_problem(text);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SyntaxError) {
        ++syntax;
        REQUIRE(e.position());
        CHECK(e.position()->offset <= text.size());
      } else {
        CHECK((e.kind() == ErrorKind::DegenerateInput ||
               e.kind() == ErrorKind::MixedVariables));
      }
    }
  }
  CHECK(syntax > 1000);
}
