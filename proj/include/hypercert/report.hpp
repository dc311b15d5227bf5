#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercert/rational.hpp"
#include "hypercert/thresholds.hpp"

namespace hypercert::report {

/// Insertion-ordered JSON so that reports are byte-identical run to run.
using json = nlohmann::ordered_json;
using poly::Rat;

inline constexpr const char* kToolName = "hypercert";
inline constexpr const char* kToolVersion = "1.0.0";

/// Rationals always travel as canonical "p" / "p/q" strings, never floats.
inline json rat_json(const Rat& r) { return poly::rat_str(r); }

inline json rat_json(const std::optional<Rat>& r) {
  if (!r) return nullptr;
  return rat_json(*r);
}

inline json verdict_json(const thresholds::Verdict& v) {
  json j;
  j["criterion"] = v.criterion;
  j["holds"] = v.holds;
  j["margin"] = rat_json(v.margin);
  if (!v.assumptions.empty()) j["assumptions"] = v.assumptions;
  return j;
}

inline json bound_json(const thresholds::ThresholdBound& b) {
  json j;
  switch (b.kind) {
    case thresholds::BoundKind::theta1: j["kind"] = "theta1"; break;
    case thresholds::BoundKind::theta1m: j["kind"] = "theta1m"; break;
    case thresholds::BoundKind::theta2: j["kind"] = "theta2"; break;
    case thresholds::BoundKind::theta2m: j["kind"] = "theta2m"; break;
  }
  if (b.m != 0) j["m"] = b.m;
  j["lower"] = rat_json(b.lower);
  j["upper"] = rat_json(b.upper);
  j["provenance"] = b.provenance;
  return j;
}

inline json sweep_row_json(const thresholds::SweepRow& r) {
  json j;
  j["d"] = r.d;
  j["c1sq"] = rat_json(r.c1sq);
  j["c2"] = rat_json(r.c2);
  j["theta1_low"] = rat_json(r.theta1_low);
  j["theta1_up"] = rat_json(r.theta1_up);
  j["theta2_low"] = rat_json(r.theta2_low);
  j["gg_margin"] = rat_json(r.gg_margin);
  j["quad1"] = rat_json(r.quad1);
  j["quad2"] = rat_json(r.quad2);
  j["main_margin"] = rat_json(r.main_margin);
  j["gg_holds"] = r.gg_holds;
  j["foliation_holds"] = r.foliation_holds;
  j["main_holds"] = r.main_holds;
  return j;
}

inline json sweep_json(const thresholds::SweepResult& r) {
  json j;
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(sweep_row_json(row));
  j["rows"] = std::move(rows);
  j["first_gg"] = r.first_gg ? json(*r.first_gg) : json(nullptr);
  j["first_foliation"] = r.first_foliation ? json(*r.first_foliation) : json(nullptr);
  j["first_main"] = r.first_main ? json(*r.first_main) : json(nullptr);
  return j;
}

inline const char* kSweepCsvHeader =
    "d,c1sq,c2,theta1_low,theta1_up,theta2_low,gg_margin,quad1,quad2,main_margin,"
    "gg_holds,foliation_holds,main_holds";

/// CSV rendering with the fixed column set above; optional cells are empty,
/// booleans are 0/1.
inline std::string sweep_csv(const thresholds::SweepResult& r) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  auto cell = [](const std::optional<Rat>& v) { return v ? poly::rat_str(*v) : std::string(); };
  for (const auto& row : r.rows) {
    out << row.d << ',' << poly::rat_str(row.c1sq) << ',' << poly::rat_str(row.c2) << ','
        << poly::rat_str(row.theta1_low) << ',' << poly::rat_str(row.theta1_up) << ','
        << cell(row.theta2_low) << ',' << poly::rat_str(row.gg_margin) << ','
        << poly::rat_str(row.quad1) << ',' << poly::rat_str(row.quad2) << ','
        << cell(row.main_margin) << ',' << (row.gg_holds ? 1 : 0) << ','
        << (row.foliation_holds ? 1 : 0) << ',' << (row.main_holds ? 1 : 0) << "\n";
  }
  return out.str();
}

inline json make_report(const std::string& command, json params, json results,
                        std::vector<std::string> provenance) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  j["provenance"] = std::move(provenance);
  return j;
}

inline std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hypercert::report
