#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "indices.hpp"
#include "verifier.hpp"

namespace sgut {

using Json = nlohmann::ordered_json;

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

inline Json to_json(const EqualityDiagnosis& d) {
  return Json{{"regular", d.regular},
              {"k_equals_n", d.k_equals_n},
              {"vertex_connected_n_minus_k_plus_1", d.vertex_connected_n_minus_k_plus_1},
              {"all_k_subsets_connected", d.all_k_subsets_connected},
              {"tree_distance_both_sides", d.tree_distance_both_sides},
              {"half_regular_odd_order", d.half_regular_odd_order},
              {"is_path", d.is_path},
              {"p3_with_k2", d.p3_with_k2}};
}

inline Json to_json(const FormulaAudit& a) {
  return Json{{"family", std::string(to_string(a.family))},
              {"n", a.n},
              {"k", a.k},
              {"printed_value", to_exact_string(a.printed_value)},
              {"computed_value", to_exact_string(a.computed_value)},
              {"agrees", a.agrees}};
}

inline Json to_json(const BoundCheck& c, std::optional<unsigned> decimal = std::nullopt) {
  Json j{{"bound_id", c.bound_id},
         {"case_label", c.case_label},
         {"direction", c.direction == BoundDirection::Upper ? "upper" : "lower"},
         {"bound_value", c.bound.str()},
         {"actual", to_exact_string(c.actual)},
         {"holds", c.holds},
         {"tight", c.tight},
         {"binding", c.binding}};
  if (c.bound.is_sqrt()) j["bound_squared"] = to_exact_string(c.bound.squared());
  if (decimal) j["bound_decimal"] = c.bound.decimal(*decimal);
  return j;
}

inline Json to_json(const EnumerationSpec& s) {
  Json j{{"n_min", s.n_min},
         {"n_max", s.n_max},
         {"require_connected", s.require_connected},
         {"require_coconnected", s.require_coconnected},
         {"dedup_isomorphism", s.dedup_isomorphism}};
  if (s.k_values.empty()) j["k_range"] = "all";
  else j["k_range"] = s.k_values;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"graph6", v.graph6},
                              {"n", v.n},
                              {"k", v.k},
                              {"bound_id", v.bound_id},
                              {"case_label", v.case_label},
                              {"bound_value", v.bound_value.str()},
                              {"actual", to_exact_string(v.actual)}});
  }
  Json tight = Json::array();
  for (const auto& t : r.tight_cases) {
    tight.push_back(Json{{"graph6", t.graph6},
                         {"n", t.n},
                         {"k", t.k},
                         {"bound_id", t.bound_id},
                         {"case_label", t.case_label},
                         {"diagnosis", to_json(t.diagnosis)}});
  }
  Json audits = Json::array();
  for (const auto& a : r.formula_audit_findings) audits.push_back(to_json(a));
  return Json{{"spec", to_json(r.spec)},
              {"bound_set", r.bound_set},
              {"audit", r.audit},
              {"graphs_scanned", r.graphs_scanned},
              {"checks_run", r.checks_run},
              {"violations", std::move(violations)},
              {"tight_cases", std::move(tight)},
              {"formula_audit_findings", std::move(audits)}};
}

inline const std::vector<std::string>& check_csv_header() {
  static const std::vector<std::string> header = {"graph6", "n",      "k",     "bound_id", "case_label",
                                                  "bound_value", "actual", "holds", "tight"};
  return header;
}

inline std::vector<std::string> check_csv_fields(const std::string& graph6, int n, int k,
                                                 const BoundCheck& c,
                                                 std::optional<unsigned> decimal = std::nullopt) {
  std::vector<std::string> f = {graph6,
                                std::to_string(n),
                                std::to_string(k),
                                c.bound_id,
                                c.case_label,
                                c.bound.str(),
                                to_exact_string(c.actual),
                                c.holds ? "true" : "false",
                                c.tight ? "true" : "false"};
  if (decimal) f.push_back(c.bound.decimal(*decimal));
  return f;
}

/// One row per recorded check (the sweep must have run with record_checks).
inline void write_checks_csv(std::ostream& out, const VerificationReport& r) {
  out << csv_row(check_csv_header());
  for (const auto& row : r.checks) out << csv_row(check_csv_fields(row.graph6, row.n, row.k, row.check));
}

}  // namespace sgut
