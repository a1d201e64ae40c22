// ineq2d: command-line front end for the bound checks, scans and integrals.
//
//   ineq2d check --ineq wirtinger2d --f "sin(pi*x/2)*sin(pi*y/2)" --domain 0,1,0,1
//   ineq2d scan --ineq ostrowski2d --domain 0,1,0,1 --format csv
//   ineq2d sharpness --ineq chebyshev-l2 --variant area --domain 0,0.5,0,0.5
//   ineq2d integrate --f 1 --domain 1,3,0,2
//   ineq2d run configs/acceptance.json --out report.json
//
// Exit status: 0 success, 1 input error, 2 some bound VIOLATED, 3 (only with
// --strict-exit) some bound ASSUMPTIONS_UNMET or INCONCLUSIVE.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ineq2d/ineq2d.hpp"

namespace {

using namespace ineq2d;

struct RawFlags {
  std::string ineq;
  std::string variant;
  std::string f;
  std::string g;
  std::vector<std::string> domains;
  std::string point;
  std::string anchor;
  std::string side;
  std::string hypothesis;
  std::optional<int> gl_points;
  std::optional<double> abs_tol;
  std::optional<double> rel_tol;
  std::optional<int> max_panels;
  std::string format = "json";
  std::string out;
  std::vector<std::string> family;
  std::vector<std::string> probes;
  bool strict_exit = false;
};

void add_common(CLI::App* cmd, RawFlags& raw, bool bound_flags) {
  if (bound_flags) {
    cmd->add_option("--ineq", raw.ineq, "Inequality id (wirtinger2d, pointwise2d, chebyshev-l2, chebyshev-mixed, "
                                        "ostrowski2d, diaz-metcalf1d, lupas1d)");
    cmd->add_option("--variant", raw.variant, "as-stated | area (chebyshev-l2 only)");
    cmd->add_option("--g", raw.g, "Second function, for pair bounds");
    cmd->add_option("--point", raw.point, "Evaluation point x,y (ostrowski2d; x is t for diaz-metcalf1d)");
    cmd->add_option("--anchor", raw.anchor, "Anchor x,y (pointwise2d)");
    cmd->add_option("--side", raw.side, "left | right (wirtinger2d)");
    cmd->add_option("--hypothesis", raw.hypothesis, "weak | strict boundary hypotheses");
  }
  cmd->add_option("--f", raw.f, "Function of x and y");
  cmd->add_option("--domain", raw.domains, "Rectangle a,b,c,d (scan accepts several)");
  cmd->add_option("--gl-points", raw.gl_points, "Gauss-Legendre points per axis");
  cmd->add_option("--abs-tol", raw.abs_tol, "Absolute quadrature tolerance");
  cmd->add_option("--rel-tol", raw.rel_tol, "Relative quadrature tolerance");
  cmd->add_option("--max-panels", raw.max_panels, "Quadrature panel budget");
  cmd->add_option("--format", raw.format, "text | json | csv");
  cmd->add_option("--out", raw.out, "Write the report here instead of stdout");
  cmd->add_flag("--strict-exit", raw.strict_exit, "Exit 3 on ASSUMPTIONS_UNMET or INCONCLUSIVE");
}

template <class T, class Parse>
T parse_flag(const std::string& flag, const std::string& value, Parse parse) {
  const auto v = parse(value);
  if (!v) throw SchemaError(flag, "invalid value '" + value + "'");
  return *v;
}

EvalPoint parse_point_flag(const std::string& flag, const std::string& value) {
  const auto v = parse_number_list(value, 2);
  if (!v) throw SchemaError(flag, "expected x,y");
  return {(*v)[0], (*v)[1]};
}

RectDomain parse_domain_flag(const std::string& value) {
  const auto v = parse_number_list(value, 4);
  if (!v) throw SchemaError("--domain", "expected a,b,c,d");
  try {
    return RectDomain((*v)[0], (*v)[1], (*v)[2], (*v)[3]);
  } catch (const std::exception& e) {
    throw SchemaError("--domain", e.what());
  }
}

JobSpec job_from_flags(Command command, const RawFlags& raw) {
  JobSpec s;
  s.command = command;
  if (!raw.ineq.empty()) s.id = parse_flag<InequalityId>("--ineq", raw.ineq, parse_inequality);
  if (!raw.variant.empty()) s.variant = parse_flag<Variant>("--variant", raw.variant, parse_variant);
  s.f_source = raw.f;
  s.g_source = raw.g;
  for (const auto& d : raw.domains) s.domains.push_back(parse_domain_flag(d));
  if (!s.domains.empty()) s.domain = s.domains.front();
  if (command != Command::Scan) s.domains.clear();
  if (!raw.point.empty()) s.point = parse_point_flag("--point", raw.point);
  if (!raw.anchor.empty()) s.anchor = parse_point_flag("--anchor", raw.anchor);
  if (!raw.side.empty()) s.side = parse_flag<Side>("--side", raw.side, parse_side);
  if (!raw.hypothesis.empty()) {
    s.hypothesis = parse_flag<HypothesisMode>("--hypothesis", raw.hypothesis, parse_hypothesis);
  }
  if (raw.gl_points) s.quad.points = *raw.gl_points;
  if (raw.abs_tol) s.quad.abs_tol = *raw.abs_tol;
  if (raw.rel_tol) s.quad.rel_tol = *raw.rel_tol;
  if (raw.max_panels) s.quad.max_panels = *raw.max_panels;
  s.format = parse_flag<Format>("--format", raw.format, parse_format);
  s.out = raw.out;
  s.family = raw.family;
  for (const auto& p : raw.probes) s.probes.push_back(parse_point_flag("--probe", p));
  return s;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

int run_single(Command command, const RawFlags& raw) {
  const JobSpec job = job_from_flags(command, raw);
  const JobOutcome o = run(job);
  emit(job.out, render(o, job.format));
  return exit_status(o.statuses, raw.strict_exit);
}

int run_batch(const std::string& config, const RawFlags& raw) {
  const std::vector<JobSpec> jobs = load_config(config);
  std::vector<JobOutcome> outcomes;
  std::vector<Status> statuses;
  for (const auto& job : jobs) {
    outcomes.push_back(run(job));
    const JobOutcome& o = outcomes.back();
    if (!job.out.empty()) emit(job.out, render(o, job.format));
    statuses.insert(statuses.end(), o.statuses.begin(), o.statuses.end());
  }
  const Format format = parse_flag<Format>("--format", raw.format, parse_format);
  std::string content;
  if (format == Format::Json) {
    content = batch_report(outcomes).dump(2) + "\n";
  } else {
    for (const auto& o : outcomes) content += render(o, format);
  }
  emit(raw.out, content);
  return exit_status(statuses, raw.strict_exit);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical certificates for double-integral Wirtinger, Chebyshev and Ostrowski bounds"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  RawFlags check_flags, scan_flags, sharp_flags, integ_flags, run_flags;
  CLI::App* check = app.add_subcommand("check", "Evaluate one bound on one function (pair)");
  add_common(check, check_flags, true);
  CLI::App* scan = app.add_subcommand("scan", "Scan a function family over domains and estimate the constant");
  add_common(scan, scan_flags, true);
  scan->add_option("--family", scan_flags.family, "Family member expression (repeatable; default compliant family)");
  scan->add_option("--probe", scan_flags.probes, "Relative anchor/point u,v in [0,1]^2 (repeatable)");
  CLI::App* sharp = app.add_subcommand("sharpness", "Evaluate a bound on its extremal function");
  add_common(sharp, sharp_flags, true);
  CLI::App* integ = app.add_subcommand("integrate", "Integrate f over a rectangle");
  add_common(integ, integ_flags, false);
  CLI::App* batch = app.add_subcommand("run", "Run every job of a JSON config document");
  std::string config_path;
  batch->add_option("config", config_path, "Config file with a top-level \"jobs\" array")->required();
  batch->add_option("--format", run_flags.format, "text | json | csv");
  batch->add_option("--out", run_flags.out, "Write the combined report here instead of stdout");
  batch->add_flag("--strict-exit", run_flags.strict_exit, "Exit 3 on ASSUMPTIONS_UNMET or INCONCLUSIVE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (check->parsed()) return run_single(Command::Check, check_flags);
    if (scan->parsed()) return run_single(Command::Scan, scan_flags);
    if (sharp->parsed()) return run_single(Command::Sharpness, sharp_flags);
    if (integ->parsed()) return run_single(Command::Integrate, integ_flags);
    return run_batch(config_path, run_flags);
  } catch (const std::exception& e) {
    std::cerr << "ineq2d: error: " << e.what() << "\n";
    return kExitInputError;
  }
}
