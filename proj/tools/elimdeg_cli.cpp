// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

// elimdeg: degree of the eliminant of two bivariate polynomial equations.
//
//   elimdeg analyze <file> [--order y|x|both] [--json]
//   elimdeg resultant <file> --eliminate y|x [--method interp|bareiss|both] [--json]
//   elimdeg verify <file> --eliminate y|x [--trials N] [--seed S] [--coeff-bound B] [--json]
//   elimdeg infinity <file> [--json]

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "elimdeg/elimdeg.h"

namespace {

constexpr int kUsageError = ELIMDEG_USAGE_ERROR;

// Owns a problem handle for the duration of one command.
class Problem {
 public:
  Problem() = default;
  Problem(const Problem&) = delete;
  Problem& operator=(const Problem&) = delete;
  ~Problem() { elimdeg_problem_free(handle_); }

  elimdeg_status load(const std::string& path) {
    return elimdeg_problem_load(path.c_str(), &handle_);
  }
  const elimdeg_problem* get() const { return handle_; }

 private:
  elimdeg_problem* handle_ = nullptr;
};

void print_message(elimdeg_status status) {
  const std::string msg = elimdeg_last_message();
  if (msg.empty()) return;
  std::cerr << "elimdeg: " << (status == ELIMDEG_OK ? "warning: " : "") << msg << "\n";
}

// Prints the report (if any) and diagnostics, returns the exit code.
int finish(elimdeg_status status, char* report) {
  if (report) {
    std::cout << report;
    std::cout.flush();
    elimdeg_string_free(report);
  }
  print_message(status);
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree of the eliminant of two bivariate polynomial equations"};
  app.set_version_flag("--version", std::string(elimdeg_version()));
  app.require_subcommand(1);

  std::string file;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Predict the eliminant degree");
  std::string order = "both";
  analyze->add_option("file", file, "Problem file")->required();
  analyze->add_option("--order", order, "Variable to eliminate")
      ->check(CLI::IsMember({"y", "x", "both"}));
  analyze->add_flag("--json", json, "JSON output");

  auto* resultant = app.add_subcommand("resultant", "Exact Sylvester resultant");
  std::string eliminate;
  std::string method = "auto";
  resultant->add_option("file", file, "Problem file (concrete coefficients)")->required();
  resultant->add_option("--eliminate", eliminate, "Variable to eliminate")->required();
  resultant->add_option("--method", method, "Determinant backend")
      ->check(CLI::IsMember({"auto", "interp", "bareiss", "both"}));
  resultant->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check the prediction on random instances");
  int trials = 20;
  std::uint64_t seed = 0;
  std::uint64_t bound = 1000000;
  verify->add_option("file", file, "Problem file")->required();
  verify->add_option("--eliminate", eliminate, "Variable to eliminate")->required();
  verify->add_option("--trials", trials, "Number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--coeff-bound", bound, "Coefficients are drawn from [-B, B] without 0")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 62));
  verify->add_flag("--json", json, "JSON output");

  auto* infinity = app.add_subcommand("infinity", "Solutions at infinity in both orders");
  bool genericize_theta = false;
  infinity->add_option("file", file, "Problem file")->required();
  infinity->add_flag("--genericize-theta", genericize_theta,
                     "Also genericize theta's leading coefficients");
  infinity->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  Problem problem;
  elimdeg_status status = problem.load(file);
  if (status != ELIMDEG_OK) return finish(status, nullptr);
  print_message(status);

  const elimdeg_format format = json ? ELIMDEG_FORMAT_JSON : ELIMDEG_FORMAT_TEXT;
  char* report = nullptr;
  if (analyze->parsed()) {
    static const std::map<std::string, elimdeg_order> orders = {
        {"y", ELIMDEG_ORDER_Y}, {"x", ELIMDEG_ORDER_X}, {"both", ELIMDEG_ORDER_BOTH}};
    status = elimdeg_analyze(problem.get(), orders.at(order), format, &report);
  } else if (resultant->parsed()) {
    static const std::map<std::string, elimdeg_method> methods = {
        {"auto", ELIMDEG_METHOD_AUTO},
        {"interp", ELIMDEG_METHOD_INTERP},
        {"bareiss", ELIMDEG_METHOD_BAREISS},
        {"both", ELIMDEG_METHOD_BOTH}};
    status = elimdeg_resultant(problem.get(), eliminate.c_str(), methods.at(method),
                               format, &report);
  } else if (verify->parsed()) {
    status = elimdeg_verify(problem.get(), eliminate.c_str(), trials, seed, bound,
                            format, &report);
  } else {
    status = elimdeg_infinity(problem.get(), genericize_theta ? 1 : 0, format, &report);
  }
  return finish(status, report);
}
