#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "experiment.hpp"

namespace seqcm {

enum class ReportFormat { json, csv, text };

inline ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown report format '" + s + "'");
}

using nlohmann::json;

inline void to_json(json& j, const PowerMeasurement& m) {
  j = json{{"power", m.power},
           {"N", m.N},
           {"quotient_length", m.quotient_length},
           {"distinguished", m.distinguished}};
}
inline void from_json(const json& j, PowerMeasurement& m) {
  j.at("power").get_to(m.power);
  j.at("N").get_to(m.N);
  j.at("quotient_length").get_to(m.quotient_length);
  j.at("distinguished").get_to(m.distinguished);
}

inline void to_json(json& j, const GotoFlags& g) {
  j = json{{"degree", g.degree},
           {"system", g.system},
           {"conditions_hold", g.conditions_hold},
           {"d_sequence", g.d_sequence},
           {"distinguished", g.distinguished},
           {"type_two", g.type_two},
           {"r_values", g.r_values},
           {"condition1_skipped_steps", g.condition1_skipped_steps}};
}
inline void from_json(const json& j, GotoFlags& g) {
  j.at("degree").get_to(g.degree);
  j.at("system").get_to(g.system);
  j.at("conditions_hold").get_to(g.conditions_hold);
  j.at("d_sequence").get_to(g.d_sequence);
  j.at("distinguished").get_to(g.distinguished);
  j.at("type_two").get_to(g.type_two);
  j.at("r_values").get_to(g.r_values);
  j.at("condition1_skipped_steps").get_to(g.condition1_skipped_steps);
}

inline void to_json(json& j, const TrialRecord& t) {
  j = json{{"index", t.index},
           {"seed", t.seed},
           {"degree", t.degree},
           {"degrees", t.degrees},
           {"system", t.system},
           {"is_sop", t.is_sop},
           {"is_distinguished", t.is_distinguished},
           {"measurements", t.measurements},
           {"stabilized", t.stabilized}};
  j["goto"] = t.goto_sequence ? json(*t.goto_sequence) : json(nullptr);
  if (t.seconds) j["seconds"] = *t.seconds;
}
inline void from_json(const json& j, TrialRecord& t) {
  j.at("index").get_to(t.index);
  j.at("seed").get_to(t.seed);
  j.at("degree").get_to(t.degree);
  j.at("degrees").get_to(t.degrees);
  j.at("system").get_to(t.system);
  j.at("is_sop").get_to(t.is_sop);
  j.at("is_distinguished").get_to(t.is_distinguished);
  j.at("measurements").get_to(t.measurements);
  j.at("stabilized").get_to(t.stabilized);
  t.goto_sequence.reset();
  if (!j.at("goto").is_null()) t.goto_sequence = j.at("goto").get<GotoFlags>();
  t.seconds.reset();
  if (j.contains("seconds")) t.seconds = j.at("seconds").get<double>();
}

inline void to_json(json& j, const ExperimentReport& r) {
  std::vector<bool> step_cm(r.step_cm.begin(), r.step_cm.end());
  j = json{{"module", r.module},
           {"ring", r.ring},
           {"seed", r.seed},
           {"powers", r.powers},
           {"invariants", {{"d", r.invariants.d}, {"rj", r.invariants.rj}, {"r", r.invariants.r_total}}},
           {"sequentially_cm", {{"verdict", r.sequentially_cm},
                                {"filtration_dims", r.filtration_dims},
                                {"step_cm", step_cm}}},
           {"cohen_macaulay", r.cohen_macaulay},
           {"conclusion", to_string(r.conclusion)}};
  j["trials"] = json::array();
  for (const auto& t : r.trials) j["trials"].push_back(t);
  j["gorenstein"] = r.gorenstein ? json(*r.gorenstein) : json(nullptr);
  if (r.error) j["error"] = *r.error;
  if (r.timings)
    j["timings"] = {{"invariants", r.timings->invariants},
                    {"filtration", r.timings->filtration},
                    {"trials", r.timings->trials}};
}
inline void from_json(const json& j, ExperimentReport& r) {
  j.at("module").get_to(r.module);
  j.at("ring").get_to(r.ring);
  j.at("seed").get_to(r.seed);
  j.at("powers").get_to(r.powers);
  const json& inv = j.at("invariants");
  inv.at("d").get_to(r.invariants.d);
  inv.at("rj").get_to(r.invariants.rj);
  inv.at("r").get_to(r.invariants.r_total);
  const json& sc = j.at("sequentially_cm");
  sc.at("verdict").get_to(r.sequentially_cm);
  sc.at("filtration_dims").get_to(r.filtration_dims);
  r.step_cm = sc.at("step_cm").get<std::vector<bool>>();
  j.at("cohen_macaulay").get_to(r.cohen_macaulay);
  r.gorenstein.reset();
  if (!j.at("gorenstein").is_null()) r.gorenstein = j.at("gorenstein").get<bool>();
  r.trials = j.at("trials").get<std::vector<TrialRecord>>();
  r.conclusion = parse_conclusion(j.at("conclusion").get<std::string>());
  r.error.reset();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  r.timings.reset();
  if (j.contains("timings")) {
    const json& t = j.at("timings");
    r.timings = ExperimentTimings{t.at("invariants").get<double>(), t.at("filtration").get<double>(),
                                  t.at("trials").get<double>()};
  }
}

inline ExperimentReport report_from_json(const std::string& text) {
  return json::parse(text).get<ExperimentReport>();
}

namespace detail {

inline std::string join(const auto& xs, const char* sep) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_report(const ExperimentReport& r, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::json:
      out << json(r).dump(2) << "\n";
      break;
    case ReportFormat::csv:
      out << "module,trial,seed,degrees,power,N,r,quotient_length,distinguished,stabilized\n";
      for (const auto& t : r.trials)
        for (const auto& m : t.measurements)
          out << detail::csv_field(r.module) << "," << t.index << "," << t.seed << ","
              << detail::join(t.degrees, " ") << "," << m.power << "," << m.N << ","
              << r.invariants.r_total << "," << m.quotient_length << ","
              << (m.distinguished ? "true" : "false") << ","
              << (t.stabilized ? "true" : "false") << "\n";
      break;
    case ReportFormat::text: {
      out << "module " << r.module << " over " << r.ring << "\n";
      out << "dim " << r.invariants.d << ", r_j = (" << detail::join(r.invariants.rj, ", ")
          << "), r = " << r.invariants.r_total << "\n";
      out << "filtration dims (" << detail::join(r.filtration_dims, ", ") << "), sequentially CM "
          << (r.sequentially_cm ? "yes" : "no") << ", CM " << (r.cohen_macaulay ? "yes" : "no");
      if (r.gorenstein) out << ", Gorenstein " << (*r.gorenstein ? "yes" : "no");
      out << "\n";
      for (const auto& t : r.trials) {
        out << "trial " << t.index << " seed " << t.seed << " [" << detail::join(t.system, ", ")
            << "] N:";
        for (const auto& m : t.measurements) out << " t=" << m.power << ":" << m.N;
        out << (t.stabilized ? " (stable)" : "");
        if (t.goto_sequence)
          out << " goto " << (t.goto_sequence->conditions_hold ? "ok" : "FAILED")
              << (t.goto_sequence->type_two ? " type II" : "");
        out << "\n";
      }
      if (r.error) out << "aborted: " << *r.error << "\n";
      out << "conclusion " << to_string(r.conclusion) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace seqcm
