// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Text and JSON rendering of analysis results.
//
// JSON output is canonical: keys sorted, two-space indentation, no floating
// point. Rationals are strings "p/q"; integers are bare numbers when they fit
// in 64 bits and decimal strings otherwise.

#include <string>
#include <vector>

#include "json.hpp"

#include "elimdeg/degree.hpp"
#include "elimdeg/oracle.hpp"
#include "elimdeg/parse.hpp"

namespace elimdeg {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Format { Text, Json };

nlohmann::json rat_to_json(const Rat& r);
nlohmann::json to_json(const DegreeReport& r);
nlohmann::json to_json(const InfinityReport& r);
nlohmann::json to_json(const VerificationResult& r);

std::string render_json(const nlohmann::json& doc);

/// One report per requested elimination order, keyed "eliminate_y" /
/// "eliminate_x" by role.
std::string render_report(const std::vector<DegreeReport>& reports, Mode mode,
                          const VarNames& vars, Format format);
std::string render_report(const DegreeReport& report, Mode mode,
                          const VarNames& vars, Format format);
std::string render_report(const InfinityReport& report, Mode mode,
                          const VarNames& vars, Format format);
std::string render_report(const VerificationResult& report, Mode mode,
                          const VarNames& vars, Format format);
std::string render_resultant(const UniPoly& resultant, Axis eliminated, Mode mode,
                             const VarNames& vars, Format format);

}  // namespace elimdeg
