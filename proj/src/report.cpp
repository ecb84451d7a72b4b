// SPDX-FileCopyrightText: (c) 2026 The elimdeg authors
//
// SPDX-License-Identifier: Apache-2.0

#include "elimdeg/report.hpp"

#include <sstream>

namespace elimdeg {

using nlohmann::json;

namespace {

const char* role_key(Axis eliminated) {
  return eliminated == Axis::Y ? "eliminate_y" : "eliminate_x";
}

json header(Mode mode) {
  json doc = json::object();
  doc["tool_version"] = kToolVersion;
  doc["mode"] = to_string(mode);
  return doc;
}

std::string text_header(Mode mode) {
  return std::string("tool_version: ") + kToolVersion + "\nmode: " + to_string(mode) + "\n";
}

void text_degree_report(std::ostringstream& out, const DegreeReport& r,
                        const VarNames& vars) {
  out << "[eliminate " << vars[index(r.eliminated)] << "]\n";
  out << "m: " << r.m << "\n";
  out << "n: " << r.n << "\n";
  out << "b: " << r.b << "\n";
  out << "edges:\n";
  for (const auto& e : r.edges) {
    out << "  h: " << to_string(e.h) << "  multiplicity: " << e.multiplicity
        << "  k: " << to_string(e.k) << "\n";
  }
  out << "t: " << r.t_theta << "\n";
  if (r.t_theta > 0) out << "t_contribution: " << to_string(r.t_contribution) << "\n";
  out << "minding_degree: " << r.minding_degree << "\n";
  out << "bezout_bound: " << r.bezout_bound << "\n";
  out << "finck_degree: "
      << (r.finck_degree ? std::to_string(*r.finck_degree) : std::string("n/a")) << "\n";
}

}  // namespace

json rat_to_json(const Rat& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) {
    return json(static_cast<std::int64_t>(r.get_num().get_si()));
  }
  return json(to_string(r));
}

json to_json(const DegreeReport& r) {
  json edges = json::array();
  for (const auto& e : r.edges) {
    edges.push_back({{"h", rat_to_json(e.h)},
                     {"multiplicity", e.multiplicity},
                     {"k", rat_to_json(e.k)}});
  }
  json doc = {
      {"m", r.m},
      {"n", r.n},
      {"b", r.b},
      {"edges", edges},
      {"t", r.t_theta},
      {"minding_degree", r.minding_degree},
      {"bezout_bound", r.bezout_bound},
  };
  doc["finck_degree"] = r.finck_degree ? json(*r.finck_degree) : json(nullptr);
  return doc;
}

json to_json(const InfinityReport& r) {
  json doc = {
      {"D_x", r.d_x},
      {"D_y", r.d_y},
      {"D_gen", r.d_gen},
      {"lost_x", r.lost_x},
      {"lost_y", r.lost_y},
      {"finite_count", r.finite_count},
  };
  if (r.gcd_lead_y_order) doc["gcd_lead_y_order"] = to_string(*r.gcd_lead_y_order);
  if (r.gcd_lead_x_order) doc["gcd_lead_x_order"] = to_string(*r.gcd_lead_x_order);
  return doc;
}

json to_json(const VerificationResult& r) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"id", t.id},
                      {"observed_degree",
                       t.observed.is_finite() ? json(t.observed.value()) : json(nullptr)},
                      {"zero", t.zero}});
  }
  return {{"predicted", r.predicted}, {"trials", trials}, {"agreement", rat_to_json(r.agreement)}};
}

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

std::string render_report(const std::vector<DegreeReport>& reports, Mode mode,
                          const VarNames& vars, Format format) {
  if (format == Format::Json) {
    json doc = header(mode);
    json rs = json::object();
    for (const auto& r : reports) rs[role_key(r.eliminated)] = to_json(r);
    doc["reports"] = rs;
    return render_json(doc);
  }
  std::ostringstream out;
  out << text_header(mode);
  for (const auto& r : reports) text_degree_report(out, r, vars);
  return out.str();
}

std::string render_report(const DegreeReport& report, Mode mode,
                          const VarNames& vars, Format format) {
  return render_report(std::vector<DegreeReport>{report}, mode, vars, format);
}

std::string render_report(const InfinityReport& r, Mode mode, const VarNames& vars,
                          Format format) {
  if (format == Format::Json) {
    json doc = header(mode);
    doc.update(to_json(r));
    return render_json(doc);
  }
  std::ostringstream out;
  out << text_header(mode);
  out << "D_x: " << r.d_x << "  (degree in " << vars[0] << ", " << vars[1]
      << " eliminated)\n";
  out << "D_y: " << r.d_y << "  (degree in " << vars[1] << ", " << vars[0]
      << " eliminated)\n";
  out << "D_gen: " << r.d_gen << "  (after genericizing leading coefficients)\n";
  out << "lost_x: " << r.lost_x << "\n";
  out << "lost_y: " << r.lost_y << "\n";
  out << "finite solutions: " << r.finite_count << "\n";
  if (r.gcd_lead_y_order) {
    out << "gcd_lead_y_order: " << to_string(*r.gcd_lead_y_order) << "\n";
  }
  if (r.gcd_lead_x_order) {
    out << "gcd_lead_x_order: " << to_string(*r.gcd_lead_x_order) << "\n";
  }
  out << "note: finite count assumes every escaped solution has exactly one "
         "infinite coordinate\n";
  return out.str();
}

std::string render_report(const VerificationResult& r, Mode mode, const VarNames& vars,
                          Format format) {
  if (format == Format::Json) {
    json doc = header(mode);
    doc.update(to_json(r));
    return render_json(doc);
  }
  std::ostringstream out;
  out << text_header(mode);
  out << "eliminate: " << vars[index(r.eliminated)] << "\n";
  out << "predicted: " << r.predicted << "\n";
  for (const auto& t : r.trials) {
    out << "trial " << t.id << ": degree " << to_string(t.observed)
        << (t.zero ? " (identically zero)" : "") << "\n";
  }
  out << "agreement: " << to_string(r.agreement) << "\n";
  out << "max_observed: " << to_string(r.max_observed) << "\n";
  return out.str();
}

std::string render_resultant(const UniPoly& res, Axis eliminated, Mode mode,
                             const VarNames& vars, Format format) {
  if (format == Format::Json) {
    json doc = header(mode);
    doc["eliminate"] = vars[index(eliminated)];
    doc["degree"] = res.is_zero() ? json(nullptr) : json(res.degree().value());
    json coeffs = json::array();
    for (const auto& c : res.coefficients()) coeffs.push_back(rat_to_json(c));
    doc["coefficients"] = coeffs;
    return render_json(doc);
  }
  std::ostringstream out;
  out << text_header(mode);
  out << "eliminate: " << vars[index(eliminated)] << "\n";
  out << "degree: " << to_string(res.degree()) << "\n";
  out << "resultant: " << to_string(res) << "\n";
  return out.str();
}

}  // namespace elimdeg
