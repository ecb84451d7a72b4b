// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/elimdeg.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "elimdeg/degree.hpp"
#include "elimdeg/error.hpp"
#include "elimdeg/oracle.hpp"
#include "elimdeg/parse.hpp"
#include "elimdeg/report.hpp"

struct elimdeg_problem {
  elimdeg::ProblemSpec spec;
};

namespace {

using namespace elimdeg;

thread_local std::string g_message;
thread_local std::size_t g_line = 0;
thread_local std::size_t g_column = 0;

void reset() {
  g_message.clear();
  g_line = 0;
  g_column = 0;
}

elimdeg_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput:
    case ErrorKind::DegenerateSharedFactor:
      return ELIMDEG_DEGENERATE;
    case ErrorKind::SyntaxError:
    case ErrorKind::MixedVariables:
      return ELIMDEG_PARSE_ERROR;
    case ErrorKind::InvalidArgument:
      return ELIMDEG_USAGE_ERROR;
    case ErrorKind::InternalInvariantViolation:
    case ErrorKind::MethodMismatch:
    case ErrorKind::ZeroDivisor:
      return ELIMDEG_INTERNAL_ERROR;
  }
  return ELIMDEG_INTERNAL_ERROR;
}

elimdeg_status fail(elimdeg_status status, std::string message) {
  g_message = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
elimdeg_status guarded(Body&& body) {
  reset();
  try {
    return body();
  } catch (const Error& e) {
    if (e.position()) {
      g_line = e.position()->line;
      g_column = e.position()->column;
    }
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ELIMDEG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ELIMDEG_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ELIMDEG_INTERNAL_ERROR, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format format_of(elimdeg_format f) {
  return f == ELIMDEG_FORMAT_JSON ? Format::Json : Format::Text;
}

Axis axis_of(const ProblemSpec& spec, const char* eliminate) {
  if (!eliminate) throw Error(ErrorKind::InvalidArgument, "no variable given");
  return resolve_axis(spec.vars, eliminate);
}

elimdeg_status parse_into(std::string_view text, elimdeg_problem** out) {
  auto problem = std::make_unique<elimdeg_problem>();
  problem->spec = parse_problem(text);
  if (problem->spec.mixed) {
    g_message = "concrete coefficients absorbed into a pattern problem";
  }
  *out = problem.release();
  return ELIMDEG_OK;
}

}  // namespace

extern "C" {

const char* elimdeg_version(void) { return kToolVersion; }

const char* elimdeg_last_message(void) { return g_message.c_str(); }

size_t elimdeg_last_error_line(void) { return g_line; }

size_t elimdeg_last_error_column(void) { return g_column; }

elimdeg_status elimdeg_problem_parse(const char* text, size_t length,
                                     elimdeg_problem** out) {
  return guarded([&] {
    if (!out || (!text && length)) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    *out = nullptr;
    return parse_into(std::string_view(text ? text : "", length), out);
  });
}

elimdeg_status elimdeg_problem_load(const char* path, elimdeg_problem** out) {
  return guarded([&] {
    if (!out || !path) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(ELIMDEG_USAGE_ERROR, std::string("cannot read ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_into(buf.str(), out);
  });
}

void elimdeg_problem_free(elimdeg_problem* problem) { delete problem; }

elimdeg_mode elimdeg_problem_mode(const elimdeg_problem* problem) {
  return problem && problem->spec.mode == Mode::Concrete ? ELIMDEG_MODE_CONCRETE
                                                         : ELIMDEG_MODE_PATTERN;
}

int elimdeg_problem_mixed(const elimdeg_problem* problem) {
  return problem && problem->spec.mixed ? 1 : 0;
}

elimdeg_status elimdeg_problem_print(const elimdeg_problem* problem, char** out) {
  return guarded([&] {
    if (!problem || !out) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    *out = duplicate(print_problem(problem->spec));
    return ELIMDEG_OK;
  });
}

elimdeg_status elimdeg_minding_degree(const elimdeg_problem* problem,
                                      const char* eliminate, int64_t* degree) {
  return guarded([&] {
    if (!problem || !degree) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    const auto& s = problem->spec;
    *degree = minding_degree(s.f, s.theta, axis_of(s, eliminate)).minding_degree;
    return ELIMDEG_OK;
  });
}

elimdeg_status elimdeg_analyze(const elimdeg_problem* problem, elimdeg_order order,
                               elimdeg_format format, char** out) {
  return guarded([&] {
    if (!problem || !out) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    const auto& s = problem->spec;
    std::vector<DegreeReport> reports;
    std::string warning;
    if (order == ELIMDEG_ORDER_BOTH) {
      reports.push_back(minding_degree(s.f, s.theta, Axis::Y));
      try {
        reports.push_back(minding_degree(s.f, s.theta, Axis::X));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateInput) throw;
        warning = std::string("eliminating ") + s.vars[0] + " skipped: " + e.what();
      }
    } else {
      reports.push_back(
          minding_degree(s.f, s.theta, order == ELIMDEG_ORDER_X ? Axis::X : Axis::Y));
    }
    *out = duplicate(render_report(reports, s.mode, s.vars, format_of(format)));
    g_message = warning;
    return ELIMDEG_OK;
  });
}

elimdeg_status elimdeg_resultant(const elimdeg_problem* problem, const char* eliminate,
                                 elimdeg_method method, elimdeg_format format,
                                 char** out) {
  return guarded([&] {
    if (!problem || !out) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    const auto& s = problem->spec;
    if (s.mode != Mode::Concrete) {
      return fail(ELIMDEG_USAGE_ERROR, "resultant needs a concrete problem file");
    }
    DetMethod m = DetMethod::Auto;
    switch (method) {
      case ELIMDEG_METHOD_INTERP: m = DetMethod::Interp; break;
      case ELIMDEG_METHOD_BAREISS: m = DetMethod::FractionFree; break;
      case ELIMDEG_METHOD_BOTH: m = DetMethod::Both; break;
      default: break;
    }
    const Axis axis = axis_of(s, eliminate);
    const UniPoly r = resultant(*s.f_concrete, *s.theta_concrete, axis, m);
    *out = duplicate(render_resultant(r, axis, s.mode, s.vars, format_of(format)));
    if (r.is_zero()) {
      return fail(ELIMDEG_DEGENERATE, "resultant vanishes identically: common factor");
    }
    return ELIMDEG_OK;
  });
}

elimdeg_status elimdeg_verify(const elimdeg_problem* problem, const char* eliminate,
                              int trials, uint64_t seed, uint64_t coeff_bound,
                              elimdeg_format format, char** out) {
  return guarded([&] {
    if (!problem || !out) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    const auto& s = problem->spec;
    const VerificationResult v =
        verify_degree(s, axis_of(s, eliminate), trials, seed, coeff_bound);
    *out = duplicate(render_report(v, s.mode, s.vars, format_of(format)));
    return ELIMDEG_OK;
  });
}

elimdeg_status elimdeg_infinity(const elimdeg_problem* problem, int genericize_theta,
                                elimdeg_format format, char** out) {
  return guarded([&] {
    if (!problem || !out) return fail(ELIMDEG_USAGE_ERROR, "null argument");
    const auto& s = problem->spec;
    const InfinityReport r = dual_order_analysis(s, genericize_theta != 0);
    *out = duplicate(render_report(r, s.mode, s.vars, format_of(format)));
    return ELIMDEG_OK;
  });
}

void elimdeg_string_free(char* s) { std::free(s); }

}  // extern "C"
