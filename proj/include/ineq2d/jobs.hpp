#pragma once

// Job descriptions for the command-line tool: parsing from JSON config
// documents, execution, and exit-status aggregation.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ineq2d/bounds.hpp"
#include "ineq2d/errors.hpp"
#include "ineq2d/expr.hpp"
#include "ineq2d/quad.hpp"
#include "ineq2d/report.hpp"
#include "ineq2d/sharpness.hpp"

namespace ineq2d {

enum class Command { Check, Scan, Sharpness, Integrate };
enum class Format { Text, Json, Csv };

inline constexpr std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Check: return "check";
    case Command::Scan: return "scan";
    case Command::Sharpness: return "sharpness";
    case Command::Integrate: return "integrate";
  }
  return "?";
}

inline constexpr std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "?";
}

/// Short command-line name of an inequality ("wirtinger2d", ...).
inline constexpr std::string_view cli_name(InequalityId id) noexcept {
  switch (id) {
    case InequalityId::Wirtinger2D: return "wirtinger2d";
    case InequalityId::Pointwise2D: return "pointwise2d";
    case InequalityId::ChebyshevL2: return "chebyshev-l2";
    case InequalityId::ChebyshevL2AreaVariant: return "chebyshev-l2-area";
    case InequalityId::ChebyshevMixed: return "chebyshev-mixed";
    case InequalityId::Ostrowski2D: return "ostrowski2d";
    case InequalityId::DiazMetcalf1D: return "diaz-metcalf1d";
    case InequalityId::Lupas1D: return "lupas1d";
  }
  return "?";
}

inline constexpr InequalityId kAllInequalities[] = {
    InequalityId::Wirtinger2D,    InequalityId::Pointwise2D, InequalityId::ChebyshevL2,
    InequalityId::ChebyshevL2AreaVariant, InequalityId::ChebyshevMixed, InequalityId::Ostrowski2D,
    InequalityId::DiazMetcalf1D,  InequalityId::Lupas1D};

namespace detail {

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace detail

/// Accepts the short name or the report name, case-insensitively.
inline std::optional<InequalityId> parse_inequality(std::string_view s) {
  const std::string key = detail::lower(s);
  for (InequalityId id : kAllInequalities) {
    if (key == cli_name(id) || key == detail::lower(to_string(id))) return id;
  }
  return std::nullopt;
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  const std::string key = detail::lower(s);
  if (key == "as-stated" || key == "stated") return Variant::AsStated;
  if (key == "area" || key == "area-variant") return Variant::AreaVariant;
  return std::nullopt;
}

inline std::optional<Command> parse_command(std::string_view s) {
  for (Command c : {Command::Check, Command::Scan, Command::Sharpness, Command::Integrate}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

inline std::optional<Format> parse_format(std::string_view s) {
  for (Format f : {Format::Text, Format::Json, Format::Csv}) {
    if (s == to_string(f)) return f;
  }
  return std::nullopt;
}

inline std::optional<Side> parse_side(std::string_view s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  return std::nullopt;
}

inline std::optional<HypothesisMode> parse_hypothesis(std::string_view s) {
  if (s == "weak") return HypothesisMode::Weak;
  if (s == "strict") return HypothesisMode::Strict;
  return std::nullopt;
}

/// Comma-separated list of exactly `n` finite numbers.
inline std::optional<std::vector<double>> parse_number_list(std::string_view s, std::size_t n) {
  if (!s.empty() && s.back() == ',') return std::nullopt;
  std::vector<double> out;
  std::string item;
  std::istringstream is{std::string(s)};
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size() || !std::isfinite(v)) return std::nullopt;
      out.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (out.size() != n) return std::nullopt;
  return out;
}

struct JobSpec {
  Command command = Command::Check;
  std::optional<InequalityId> id;
  Variant variant = Variant::AsStated;
  std::string f_source;
  std::string g_source;
  RectDomain domain;
  std::optional<EvalPoint> anchor;
  std::optional<EvalPoint> point;
  Side side = Side::Left;
  HypothesisMode hypothesis = HypothesisMode::Weak;
  QuadConfig quad;
  Format format = Format::Json;
  std::string out;
  std::vector<std::string> family;   ///< scan: expression sources; empty = compliant family
  std::vector<RectDomain> domains;   ///< scan: empty = {domain}
  std::vector<EvalPoint> probes;     ///< scan: relative coordinates in each domain

  /// Throws SchemaError when a field required by `command` is missing.
  void validate() const {
    quad.validate();
    switch (command) {
      case Command::Integrate:
        if (f_source.empty()) throw SchemaError("f-source", "integrate needs f-source");
        break;
      case Command::Check:
        if (!id) throw SchemaError("inequality-id", "check needs inequality-id");
        if (f_source.empty()) throw SchemaError("f-source", "check needs f-source");
        if (is_pair(*id) && g_source.empty()) {
          throw SchemaError("g-source", std::string(to_string(*id)) + " needs g-source");
        }
        break;
      case Command::Scan:
      case Command::Sharpness:
        if (!id) throw SchemaError("inequality-id", std::string(to_string(command)) + " needs inequality-id");
        break;
    }
  }
};

// ---------------------------------------------------------------------------
// JSON <-> JobSpec

namespace detail {

inline const char* kJobFields[] = {"command",   "inequality-id", "variant",   "f-source",       "g-source",
                                   "domain",    "anchor",        "point",     "side",           "hypothesis",
                                   "gl-points", "abs-tol",       "rel-tol",   "max-panels",     "initial-splits",
                                   "format",    "out",           "family",    "domains",        "probes"};

inline std::string field_path(const std::string& prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

template <class J>
std::string get_string(const J& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.template get<std::string>();
}

template <class J>
double get_number(const J& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.template get<double>();
  if (!std::isfinite(v)) throw SchemaError(path, "expected a finite number");
  return v;
}

template <class J>
long get_integer(const J& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.template get<long>();
}

/// Array of n numbers, or a string "v1,v2,...".
template <class J>
std::vector<double> get_numbers(const J& j, std::size_t n, const std::string& path) {
  if (j.is_string()) {
    auto v = parse_number_list(j.template get<std::string>(), n);
    if (!v) throw SchemaError(path, "expected " + std::to_string(n) + " comma-separated numbers");
    return *v;
  }
  if (!j.is_array() || j.size() != n) throw SchemaError(path, "expected an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

template <class J>
RectDomain get_domain(const J& j, const std::string& path) {
  const auto v = get_numbers(j, 4, path);
  try {
    return RectDomain(v[0], v[1], v[2], v[3]);
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

template <class J>
EvalPoint get_point(const J& j, const std::string& path) {
  const auto v = get_numbers(j, 2, path);
  return {v[0], v[1]};
}

template <class T, class J, class Parse>
T get_enum(const J& j, const std::string& path, Parse parse, const char* what) {
  const std::string s = get_string(j, path);
  const auto v = parse(s);
  if (!v) throw SchemaError(path, "unknown " + std::string(what) + " '" + s + "'");
  return *v;
}

}  // namespace detail

/// Parses one job object. `prefix` is prepended to field paths in errors.
template <class J>
JobSpec job_from_json(const J& j, const std::string& prefix = "") {
  using namespace detail;
  if (!j.is_object()) throw SchemaError(prefix.empty() ? "job" : prefix, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool known = std::any_of(std::begin(kJobFields), std::end(kJobFields),
                                   [&](const char* f) { return it.key() == f; });
    if (!known) throw SchemaError(field_path(prefix, it.key()), "unknown field");
  }
  auto path = [&](std::string_view key) { return field_path(prefix, key); };
  // null marks an unset optional field, as written by to_json(JobSpec).
  auto has = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
  JobSpec s;
  if (has("command")) s.command = get_enum<Command>(j["command"], path("command"), parse_command, "command");
  if (has("inequality-id")) {
    s.id = get_enum<InequalityId>(j["inequality-id"], path("inequality-id"), parse_inequality, "inequality id");
  }
  if (has("variant")) s.variant = get_enum<Variant>(j["variant"], path("variant"), parse_variant, "variant");
  if (has("f-source")) s.f_source = get_string(j["f-source"], path("f-source"));
  if (has("g-source")) s.g_source = get_string(j["g-source"], path("g-source"));
  if (has("domain")) s.domain = get_domain(j["domain"], path("domain"));
  if (has("anchor")) s.anchor = get_point(j["anchor"], path("anchor"));
  if (has("point")) s.point = get_point(j["point"], path("point"));
  if (has("side")) s.side = get_enum<Side>(j["side"], path("side"), parse_side, "side");
  if (has("hypothesis")) {
    s.hypothesis = get_enum<HypothesisMode>(j["hypothesis"], path("hypothesis"), parse_hypothesis, "hypothesis mode");
  }
  if (has("gl-points")) s.quad.points = static_cast<int>(get_integer(j["gl-points"], path("gl-points")));
  if (has("abs-tol")) s.quad.abs_tol = get_number(j["abs-tol"], path("abs-tol"));
  if (has("rel-tol")) s.quad.rel_tol = get_number(j["rel-tol"], path("rel-tol"));
  if (has("max-panels")) s.quad.max_panels = static_cast<int>(get_integer(j["max-panels"], path("max-panels")));
  if (has("initial-splits")) {
    s.quad.initial_splits = static_cast<int>(get_integer(j["initial-splits"], path("initial-splits")));
  }
  if (has("format")) s.format = get_enum<Format>(j["format"], path("format"), parse_format, "format");
  if (has("out")) s.out = get_string(j["out"], path("out"));
  if (has("family")) {
    const auto& fam = j["family"];
    if (!fam.is_array()) throw SchemaError(path("family"), "expected an array of expressions");
    for (std::size_t i = 0; i < fam.size(); ++i) {
      s.family.push_back(get_string(fam[i], path("family") + "[" + std::to_string(i) + "]"));
    }
  }
  if (has("domains")) {
    const auto& ds = j["domains"];
    if (!ds.is_array()) throw SchemaError(path("domains"), "expected an array of domains");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      s.domains.push_back(get_domain(ds[i], path("domains") + "[" + std::to_string(i) + "]"));
    }
  }
  if (has("probes")) {
    const auto& ps = j["probes"];
    if (!ps.is_array()) throw SchemaError(path("probes"), "expected an array of points");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      s.probes.push_back(get_point(ps[i], path("probes") + "[" + std::to_string(i) + "]"));
    }
  }
  try {
    s.quad.validate();
  } catch (const std::exception& e) {
    throw SchemaError(prefix.empty() ? "quad" : prefix, e.what());
  }
  try {
    s.validate();
  } catch (const SchemaError& e) {
    throw SchemaError(path(e.field()), e.message());
  }
  return s;
}

/// The fully resolved job, defaults included, as written into reports.
inline json to_json(const JobSpec& s) {
  json domains = json::array();
  for (const auto& d : s.domains) domains.push_back(to_json(d));
  json probes = json::array();
  for (const auto& p : s.probes) probes.push_back(json::array({p.x, p.y}));
  json j = {{"command", std::string(to_string(s.command))},
            {"inequality-id", s.id ? json(std::string(to_string(*s.id))) : json(nullptr)},
            {"variant", std::string(to_string(s.variant))},
            {"f-source", s.f_source},
            {"g-source", s.g_source},
            {"domain", to_json(s.domain)},
            {"anchor", detail::point_json(s.anchor)},
            {"point", detail::point_json(s.point)},
            {"side", std::string(to_string(s.side))},
            {"hypothesis", std::string(to_string(s.hypothesis))}};
  j.update(to_json(s.quad));
  j["format"] = std::string(to_string(s.format));
  j["out"] = s.out;
  j["family"] = s.family;
  j["domains"] = domains;
  j["probes"] = probes;
  return j;
}

/// Parses a config document: {"jobs": [JobSpec, ...]}.
inline std::vector<JobSpec> parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "config must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "jobs") throw SchemaError(it.key(), "unknown field");
  }
  if (!doc.contains("jobs")) throw SchemaError("jobs", "missing field");
  const auto& jobs = doc["jobs"];
  if (!jobs.is_array()) throw SchemaError("jobs", "expected an array");
  std::vector<JobSpec> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) out.push_back(job_from_json(jobs[i], "jobs[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<JobSpec> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---------------------------------------------------------------------------
// Execution

struct JobOutcome {
  json report;                  ///< JSON result (without envelope)
  std::string text;             ///< human-readable rendering
  std::string csv;              ///< CSV rendering
  std::vector<Status> statuses; ///< one per bound evaluated (rows for scans)
};

namespace detail {

inline Expression parse_field(const std::string& source, const char* field) {
  try {
    return parse(source);
  } catch (const ParseError& e) {
    throw ParseError(std::string(field) + ": " + e.message(), e.position());
  }
}

inline BoundOptions bound_options(const JobSpec& s) {
  BoundOptions o;
  o.quad = s.quad;
  o.mode = s.hypothesis;
  return o;
}

inline EvalPoint resolve_point(const JobSpec& s, bool prefer_anchor) {
  const auto& first = prefer_anchor ? s.anchor : s.point;
  const auto& second = prefer_anchor ? s.point : s.anchor;
  if (first) return *first;
  if (second) return *second;
  return {s.domain.mid_x(), s.domain.mid_y()};
}

inline BoundReport run_bound(InequalityId id, Variant variant, const Expression& f, const std::optional<Expression>& g,
                             const JobSpec& s) {
  const BoundOptions opt = bound_options(s);
  const RectDomain& D = s.domain;
  switch (id) {
    case InequalityId::Wirtinger2D: return wirtinger_2d(f, D, s.side, opt);
    case InequalityId::Pointwise2D: return pointwise_2d(f, D, resolve_point(s, true), opt);
    case InequalityId::ChebyshevL2: return chebyshev_l2_bound(f, *g, D, variant, opt);
    case InequalityId::ChebyshevL2AreaVariant: return chebyshev_l2_bound(f, *g, D, Variant::AreaVariant, opt);
    case InequalityId::ChebyshevMixed: return chebyshev_mixed_bound(f, *g, D, opt);
    case InequalityId::Ostrowski2D: return ostrowski_2d(f, D, resolve_point(s, false), opt);
    case InequalityId::DiazMetcalf1D: {
      const double t = s.point ? s.point->x : (s.anchor ? s.anchor->x : D.a());
      return diaz_metcalf_1d(f, D.a(), D.b(), t, opt);
    }
    case InequalityId::Lupas1D: return lupas_1d(f, *g, D.a(), D.b(), opt);
  }
  throw PreconditionError("unknown inequality");
}

inline JobOutcome run_check(const JobSpec& s) {
  const Expression f = parse_field(s.f_source, "f-source");
  std::optional<Expression> g;
  if (is_pair(*s.id)) g = parse_field(s.g_source, "g-source");
  const BoundReport r = run_bound(*s.id, s.variant, f, g, s);
  JobOutcome out;
  out.report = to_json(r);
  out.text = to_text(r);
  out.csv = to_csv(r, s.f_source, s.g_source);
  out.statuses = {r.status};
  return out;
}

inline JobOutcome run_scan(const JobSpec& s) {
  ScanRequest req;
  req.id = *s.id;
  req.variant = s.variant;
  req.side = s.side;
  req.domains = s.domains.empty() ? std::vector<RectDomain>{s.domain} : s.domains;
  req.probes = s.probes;
  req.options = bound_options(s);
  if (!s.family.empty()) {
    std::vector<NamedExpression> fam;
    for (std::size_t i = 0; i < s.family.size(); ++i) {
      fam.push_back({s.family[i], parse_field(s.family[i], "family")});
    }
    req.family = [fam](const RectDomain&) { return fam; };
  }
  const ScanResult r = constant_scan(req);
  JobOutcome out;
  out.report = to_json(r);
  out.text = to_text(r);
  out.csv = to_csv(r);
  for (const auto& row : r.rows) out.statuses.push_back(row.status);
  return out;
}

inline JobOutcome run_sharpness(const JobSpec& s) {
  ExtremalSpec spec;
  spec.target = *s.id == InequalityId::ChebyshevL2 && s.variant == Variant::AreaVariant
                    ? InequalityId::ChebyshevL2AreaVariant
                    : *s.id;
  spec.domain = s.domain;
  spec.side = s.side;
  if (spec.target == InequalityId::Pointwise2D) spec.anchor = resolve_point(s, true);
  spec.validate();
  const ExtremalPair e = build_extremal(spec);
  const BoundReport r = extremal_report(spec, s.variant, bound_options(s));
  JobOutcome out;
  out.report = {{"extremal-f", e.f.to_string()},
                {"extremal-g", e.g ? json(e.g->to_string()) : json(nullptr)},
                {"achieved-ratio", detail::optional_json(r.ratio)},
                {"bound", to_json(r)}};
  out.text = "extremal f = " + e.f.to_string() + "\n" + (e.g ? "extremal g = " + e.g->to_string() + "\n" : "") +
             "achieved ratio " + (r.ratio ? format_g17(*r.ratio) : "undefined") + "\n" + to_text(r);
  out.csv = to_csv(r, "extremal", e.g ? "extremal" : "");
  out.statuses = {r.status};
  return out;
}

inline JobOutcome run_integrate(const JobSpec& s) {
  const Expression f = parse_field(s.f_source, "f-source");
  const QuadResult q = integrate(f, s.domain, s.quad);
  JobOutcome out;
  out.report = {{"f-source", s.f_source}, {"domain", to_json(s.domain)}};
  out.report.update(to_json(q));
  out.text = "integral of " + s.f_source + " over " + domain_text(s.domain) + "\n  value   " + format_g17(q.value) +
             "\n  error   " + format_short(q.error) + "\n  panels  " + std::to_string(q.panels) + "\n" +
             (q.converged ? "" : "  warning did not converge\n");
  std::ostringstream csv;
  csv << "f,a,b,c,d,value,error,panels,converged\n"
      << csv_field(s.f_source) << ',' << format_g17(s.domain.a()) << ',' << format_g17(s.domain.b()) << ','
      << format_g17(s.domain.c()) << ',' << format_g17(s.domain.d()) << ',' << format_g17(q.value) << ','
      << format_g17(q.error) << ',' << q.panels << ',' << (q.converged ? "true" : "false") << '\n';
  out.csv = csv.str();
  out.statuses = {q.converged ? Status::Holds : Status::Inconclusive};
  return out;
}

}  // namespace detail

/// Runs one job. Input problems surface as ParseError, SchemaError or
/// PreconditionError.
inline JobOutcome run(const JobSpec& job) {
  job.validate();
  JobOutcome out;
  switch (job.command) {
    case Command::Check: out = detail::run_check(job); break;
    case Command::Scan: out = detail::run_scan(job); break;
    case Command::Sharpness: out = detail::run_sharpness(job); break;
    case Command::Integrate: out = detail::run_integrate(job); break;
  }
  json wrapped = {{"config", to_json(job)}, {"result", out.report}};
  out.report = std::move(wrapped);
  return out;
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitUnresolved = 3;

/// 2 if any bound is VIOLATED; otherwise 3 under `strict_exit` when some
/// bound is ASSUMPTIONS_UNMET or INCONCLUSIVE; otherwise 0.
inline int exit_status(const std::vector<Status>& statuses, bool strict_exit) {
  auto any = [&](Status s) { return std::find(statuses.begin(), statuses.end(), s) != statuses.end(); };
  if (any(Status::Violated)) return kExitViolated;
  if (strict_exit && (any(Status::AssumptionsUnmet) || any(Status::Inconclusive))) return kExitUnresolved;
  return kExitOk;
}

/// Single-job document: envelope plus the job's config and result.
inline json single_report(const JobOutcome& o) {
  json doc = report_envelope();
  doc.update(o.report);
  return doc;
}

/// Batch document: envelope plus one entry per job, in config order.
inline json batch_report(const std::vector<JobOutcome>& outcomes) {
  json doc = report_envelope();
  json reports = json::array();
  for (const auto& o : outcomes) reports.push_back(o.report);
  doc["reports"] = reports;
  return doc;
}

/// The artifact of `o` in `format`, newline-terminated.
inline std::string render(const JobOutcome& o, Format format) {
  switch (format) {
    case Format::Json: return single_report(o).dump(2) + "\n";
    case Format::Csv: return o.csv;
    case Format::Text: return o.text;
  }
  return {};
}

}  // namespace ineq2d
