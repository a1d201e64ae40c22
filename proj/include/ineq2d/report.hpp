#pragma once

// JSON, CSV and plain-text renderings of bound reports, scans and integrals.
// JSON keys are always present (absent optionals serialize as null) so that
// the same input always yields the same document shape.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ineq2d/bounds.hpp"
#include "ineq2d/quad.hpp"
#include "ineq2d/sharpness.hpp"

#ifndef INEQ2D_VERSION
#define INEQ2D_VERSION "0.1.0"
#endif

namespace ineq2d {

inline constexpr const char* kToolName = "ineq2d";
inline constexpr const char* kToolVersion = INEQ2D_VERSION;
inline constexpr const char* kTimestampKey = "generated-at";

using json = nlohmann::ordered_json;

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// %.17g: enough digits to round-trip any double.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace detail {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

inline json point_json(const std::optional<EvalPoint>& p) {
  return p ? json::array({p->x, p->y}) : json(nullptr);
}

inline json edges_json(const std::array<double, 4>& r) {
  json j = json::object();
  for (Edge e : kAllEdges) j[std::string(edge_name(e))] = r[static_cast<std::size_t>(e)];
  return j;
}

}  // namespace detail

inline json to_json(const RectDomain& d) { return json::array({d.a(), d.b(), d.c(), d.d()}); }

inline json to_json(const QuadConfig& q) {
  return {{"gl-points", q.points},
          {"abs-tol", q.abs_tol},
          {"rel-tol", q.rel_tol},
          {"max-panels", q.max_panels},
          {"initial-splits", q.initial_splits}};
}

inline json to_json(const QuadResult& q) {
  return {{"value", q.value}, {"error", q.error}, {"panels", q.panels}, {"converged", q.converged}};
}

inline json to_json(const RangeEstimate& r) {
  return {{"gamma", r.gamma_est}, {"Gamma", r.Gamma_est}, {"grid", r.grid}};
}

inline json to_json(const FunctionCheck& c) {
  json j = {{"subject", c.subject},
            {"domain", to_json(c.domain)},
            {"smooth", c.smooth},
            {"tolerance", c.tolerance},
            {"residual", detail::edges_json(c.residual)},
            {"residual-dx", c.residual_dx ? detail::edges_json(*c.residual_dx) : json(nullptr)},
            {"residual-dy", c.residual_dy ? detail::edges_json(*c.residual_dy) : json(nullptr)},
            {"weak-left", c.weak_left},
            {"weak-right", c.weak_right},
            {"strict-left", c.strict_left},
            {"strict-right", c.strict_right}};
  return j;
}

inline json to_json(const AssumptionReport& a) {
  json checks = json::array();
  for (const auto& c : a.checks) checks.push_back(to_json(c));
  return {{"mode", std::string(to_string(a.mode))},
          {"satisfied", a.satisfied()},
          {"unmet", a.unmet},
          {"range", a.range ? to_json(*a.range) : json(nullptr)},
          {"checks", checks}};
}

inline json to_json(const BoundReport& r) {
  json integrals = json::array();
  for (const auto& q : r.integrals) {
    json item = {{"name", q.name}};
    item.update(to_json(q.result));
    integrals.push_back(item);
  }
  return {{"inequality-id", std::string(to_string(r.id))},
          {"variant", r.variant ? json(std::string(to_string(*r.variant))) : json(nullptr)},
          {"side", r.side ? json(std::string(to_string(*r.side))) : json(nullptr)},
          {"domain", to_json(r.domain)},
          {"point", detail::point_json(r.point)},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"ratio", detail::optional_json(r.ratio)},
          {"eps", r.eps},
          {"status", std::string(to_string(r.status))},
          {"constant", published_constant(r.id)},
          {"range-estimated", r.range_estimated},
          {"smooth-inputs", r.smooth_inputs},
          {"assumptions", to_json(r.assumptions)},
          {"integrals", integrals}};
}

inline json to_json(const ScanRow& row) {
  return {{"domain", to_json(row.domain)},
          {"point", detail::point_json(row.point)},
          {"fid", row.fid},
          {"gid", row.gid},
          {"lhs", row.lhs},
          {"rhs", row.rhs},
          {"ratio", detail::optional_json(row.ratio)},
          {"eps", row.eps},
          {"status", std::string(to_string(row.status))},
          {"constant", row.constant}};
}

inline json to_json(const ScanResult& s) {
  json rows = json::array();
  for (const auto& row : s.rows) rows.push_back(to_json(row));
  return {{"inequality-id", std::string(to_string(s.id))},
          {"variant", s.variant ? json(std::string(to_string(*s.variant))) : json(nullptr)},
          {"max-ratio", detail::optional_json(s.max_ratio)},
          {"constant-estimate", detail::optional_json(s.constant_estimate)},
          {"published-constant", published_constant(s.id)},
          {"best-fid", s.best_fid},
          {"best-gid", s.best_gid},
          {"rows", rows}};
}

/// Envelope shared by every report: tool, version and timestamp.
inline json report_envelope() {
  return {{"tool", kToolName}, {"version", kToolVersion}, {kTimestampKey, utc_timestamp()}};
}

/// Copy of `report` with every timestamp field removed (recursively).
inline json strip_timestamps(json report) {
  if (report.is_object()) {
    report.erase(kTimestampKey);
    for (auto& item : report.items()) item.value() = strip_timestamps(item.value());
  } else if (report.is_array()) {
    for (auto& value : report) value = strip_timestamps(value);
  }
  return report;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* kCsvHeader = "ineq,variant,a,b,c,d,fid,gid,lhs,rhs,ratio,eps,status";

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string csv_line(InequalityId id, const std::optional<Variant>& variant, const RectDomain& d,
                            const std::string& fid, const std::string& gid, double lhs, double rhs,
                            const std::optional<double>& ratio, double eps, Status status) {
  std::ostringstream os;
  os << to_string(id) << ',' << (variant ? std::string(to_string(*variant)) : "") << ',' << format_g17(d.a()) << ','
     << format_g17(d.b()) << ',' << format_g17(d.c()) << ',' << format_g17(d.d()) << ',' << csv_field(fid) << ','
     << csv_field(gid) << ',' << format_g17(lhs) << ',' << format_g17(rhs) << ','
     << (ratio ? format_g17(*ratio) : "") << ',' << format_g17(eps) << ',' << to_string(status) << '\n';
  return os.str();
}

}  // namespace detail

/// One row per (function, domain) pair of the scan, header first.
inline std::string to_csv(const ScanResult& s) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& row : s.rows) {
    out += detail::csv_line(s.id, s.variant, row.domain, row.fid, row.gid, row.lhs, row.rhs, row.ratio, row.eps,
                            row.status);
  }
  return out;
}

/// A single check as a one-row table with the scan columns.
inline std::string to_csv(const BoundReport& r, const std::string& fid, const std::string& gid) {
  return std::string(kCsvHeader) + "\n" +
         detail::csv_line(r.id, r.variant, r.domain, fid, gid, r.lhs, r.rhs, r.ratio, r.eps, r.status);
}

// ---------------------------------------------------------------------------
// Text

inline std::string domain_text(const RectDomain& d) {
  return "[" + format_short(d.a()) + ", " + format_short(d.b()) + "] x [" + format_short(d.c()) + ", " +
         format_short(d.d()) + "]";
}

inline std::string to_text(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.id) << " on " << domain_text(r.domain);
  if (r.variant) os << "  variant " << to_string(*r.variant);
  if (r.side) os << "  side " << to_string(*r.side);
  if (r.point) os << "  point (" << format_short(r.point->x) << ", " << format_short(r.point->y) << ")";
  os << "\n";
  os << "  lhs     " << format_g17(r.lhs) << "\n";
  os << "  rhs     " << format_g17(r.rhs) << "\n";
  os << "  ratio   " << (r.ratio ? format_g17(*r.ratio) : "undefined") << "\n";
  os << "  eps     " << format_short(r.eps) << "\n";
  os << "  status  " << to_string(r.status) << "\n";
  if (r.range_estimated && r.assumptions.range) {
    os << "  range   [" << format_short(r.assumptions.range->gamma_est) << ", "
       << format_short(r.assumptions.range->Gamma_est) << "] (inner estimate)\n";
  }
  if (!r.smooth_inputs) os << "  note    inputs contain abs/sgn/step; derivatives hold almost everywhere\n";
  for (const auto& u : r.assumptions.unmet) os << "  unmet   " << u << "\n";
  for (const auto& q : r.integrals) {
    if (!q.result.converged) os << "  warning " << q.name << " did not converge\n";
  }
  return os.str();
}

inline std::string to_text(const ScanResult& s) {
  std::ostringstream os;
  os << "scan " << to_string(s.id);
  if (s.variant) os << "  variant " << to_string(*s.variant);
  os << "  rows " << s.rows.size() << "\n";
  for (const auto& row : s.rows) {
    os << "  " << domain_text(row.domain) << "  " << row.fid;
    if (!row.gid.empty()) os << " / " << row.gid;
    os << "  ratio " << (row.ratio ? format_short(*row.ratio) : "undefined") << "  " << to_string(row.status) << "\n";
  }
  os << "max ratio          " << (s.max_ratio ? format_g17(*s.max_ratio) : "none") << "\n";
  os << "constant estimate  " << (s.constant_estimate ? format_g17(*s.constant_estimate) : "none") << "\n";
  os << "published constant " << format_g17(published_constant(s.id)) << "\n";
  if (!s.best_fid.empty()) {
    os << "attained by        " << s.best_fid << (s.best_gid.empty() ? "" : " / " + s.best_gid) << "\n";
  }
  return os.str();
}

}  // namespace ineq2d
