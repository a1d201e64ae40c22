// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "ineq2d/ineq2d.hpp"

using namespace ineq2d;
using std::numbers::pi;

namespace {

#ifndef INEQ2D_SOURCE_DIR
#define INEQ2D_SOURCE_DIR "."
#endif

const double kPi2 = pi * pi;
const double kPi4 = kPi2 * kPi2;

struct Gate {
  int failures = 0;

  void report(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("%s  %d  %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  /// Runs `body`; an exception counts as a failure.
  void run(int id, const char* title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail += std::string(" exception: ") + e.what();
    }
    report(id, title, ok, detail);
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool rel_close(double got, double want, double rel) { return std::fabs(got - want) <= rel * std::fabs(want); }

// 1 -------------------------------------------------------------------------
bool extremal_reproduction(std::string& detail) {
  bool ok = true;
  for (const RectDomain& d : {RectDomain(0, 1, 0, 1), RectDomain(0, 2, 0, 3)}) {
    const auto t0 = std::chrono::steady_clock::now();
    ExtremalSpec spec;
    spec.domain = d;
    const Expression f = build_extremal(spec).f;
    const double f2 = l2_norm_sq(f, d, QuadConfig{}).value;
    const double fxy2 = l2_norm_sq(mixed_partial(f), d, QuadConfig{}).value;
    const BoundReport r = wirtinger_2d(f, d, Side::Left);
    const double secs = seconds_since(t0);
    const double want_f2 = d.area() / 4.0;
    const double want_fxy2 = kPi4 / (64.0 * d.area());
    const bool here = rel_close(f2, want_f2, 1e-10) && rel_close(fxy2, want_fxy2, 1e-10) && r.ratio &&
                      std::fabs(*r.ratio - 1.0) <= 1e-8 && rel_close(r.lhs, want_f2, 1e-10) &&
                      rel_close(r.rhs, want_f2, 1e-10) && r.status == Status::Holds && secs < 1.0;
    ok = ok && here;
    detail += "area " + fmt("%g", d.area()) + ": lhs " + fmt("%.12g", r.lhs) + " rhs " + fmt("%.12g", r.rhs) +
              " ratio " + fmt("%.12g", r.ratio.value_or(NAN)) + " (" + fmt("%.3f", secs) + " s); ";
  }
  return ok;
}

// 2 -------------------------------------------------------------------------
bool quadrature_exactness(std::string& detail) {
  const GaussRule& rule = gauss_legendre(20);
  double worst_mono = 0.0;
  auto mono = [](int p, double lo, double hi) { return (std::pow(hi, p + 1) - std::pow(lo, p + 1)) / (p + 1); };
  for (const RectDomain& d : {RectDomain(0, 1, 0, 1), RectDomain(0.5, 1.5, 1, 2)}) {
    for (int p = 0; p <= 39; ++p) {
      for (int q = 0; q <= 39; ++q) {
        auto f = [p, q](double x, double y) { return std::pow(x, p) * std::pow(y, q); };
        const double got = tensor_gauss(f, rule, d.a(), d.b(), d.c(), d.d());
        const double want = mono(p, d.a(), d.b()) * mono(q, d.c(), d.d());
        worst_mono = std::max(worst_mono, std::fabs(got - want) / std::fabs(want));
      }
    }
  }
  int honest = 0;
  const auto cases = corpus::integrals();
  for (const auto& c : cases) {
    const QuadResult r = integrate(parse(c.source), RectDomain(c.a, c.b, c.c, c.d), QuadConfig{});
    if (r.converged && std::fabs(r.value - c.exact) <= 10.0 * r.error) ++honest;
  }
  detail = "monomial worst rel " + fmt("%.2e", worst_mono) + "; corpus within 10x error " + std::to_string(honest) +
           "/" + std::to_string(cases.size());
  return worst_mono <= 1e-12 && honest == static_cast<int>(cases.size());
}

// 3 -------------------------------------------------------------------------
bool derivative_oracle(std::string& detail) {
  const double h = 1e-5;
  std::mt19937 rng(20);
  std::uniform_real_distribution<double> u(0.2, 1.2);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 20; ++i) {
    const double x = u(rng);
    pts.emplace_back(x, u(rng));
  }
  double worst = 0.0;
  int bad = 0;
  const auto srcs = corpus::derivatives();
  for (const char* src : srcs) {
    const Expression e = parse(src);
    const Expression dx = differentiate(e, Var::X);
    const Expression dy = differentiate(e, Var::Y);
    for (auto [x, y] : pts) {
      const double fdx = (e(x + h, y) - e(x - h, y)) / (2 * h);
      const double fdy = (e(x, y + h) - e(x, y - h)) / (2 * h);
      for (auto [got, want] : {std::pair{dx(x, y), fdx}, std::pair{dy(x, y), fdy}}) {
        const double err = std::fabs(got - want) / std::max(std::fabs(want), 1e-3);
        worst = std::max(worst, err);
        if (err > 1e-6) ++bad;
      }
    }
  }
  detail = std::to_string(srcs.size()) + " expressions x 20 points, worst rel " + fmt("%.2e", worst);
  return bad == 0 && srcs.size() >= 20;
}

// 4 -------------------------------------------------------------------------
struct SuiteEntry {
  const char* name;
  ScanRequest req;
};

bool property_suite(std::string& detail) {
  const std::vector<RectDomain> domains{RectDomain(0, 1, 0, 1), RectDomain(1, 3, 0, 2)};
  const std::vector<EvalPoint> anchors{{0.5, 0.5}, {0.25, 0.25}, {0.75, 0.25}, {0.25, 0.75}, {0.7, 0.6}};
  const std::vector<EvalPoint> points{{0.5, 0.5}, {0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto make = [&](InequalityId id) {
    ScanRequest r;
    r.id = id;
    r.domains = domains;
    r.include_extremal = false;
    return r;
  };
  std::vector<SuiteEntry> suite;
  suite.push_back({"wirtinger2d-left", make(InequalityId::Wirtinger2D)});
  suite.push_back({"wirtinger2d-right", make(InequalityId::Wirtinger2D)});
  suite.back().req.side = Side::Right;
  suite.push_back({"pointwise2d", make(InequalityId::Pointwise2D)});
  suite.back().req.probes = anchors;
  suite.push_back({"chebyshev-mixed", make(InequalityId::ChebyshevMixed)});
  suite.push_back({"ostrowski2d", make(InequalityId::Ostrowski2D)});
  suite.back().req.probes = points;
  suite.push_back({"diaz-metcalf1d", make(InequalityId::DiazMetcalf1D)});
  suite.back().req.probes = {{0, 0}, {0.3, 0}, {0.5, 0}, {1, 0}};
  suite.push_back({"lupas1d", make(InequalityId::Lupas1D)});
  suite.push_back({"chebyshev-l2-area", make(InequalityId::ChebyshevL2)});
  suite.back().req.variant = Variant::AreaVariant;

  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::size_t family = compliant_family(domains[0]).size();
  int violated = 0;
  for (const auto& entry : suite) {
    const ScanResult res = constant_scan(entry.req);
    std::map<Status, int> counts;
    for (const auto& row : res.rows) ++counts[row.status];
    violated += counts[Status::Violated];
    const bool all_hold = counts[Status::Holds] == static_cast<int>(res.rows.size());
    ok = ok && all_hold;
    detail += std::string(entry.name) + " " + std::to_string(counts[Status::Holds]) + "/" +
              std::to_string(res.rows.size());
    if (!all_hold) {
      detail += " (unmet " + std::to_string(counts[Status::AssumptionsUnmet]) + ", violated " +
                std::to_string(counts[Status::Violated]) + ", inconclusive " +
                std::to_string(counts[Status::Inconclusive]) + ")";
    }
    detail += "; ";
  }
  const double secs = seconds_since(t0);
  detail += "family " + std::to_string(family) + " x 2 domains, violated " + std::to_string(violated) + ", " +
            fmt("%.1f", secs) + " s";
  return ok && violated == 0 && family >= 12 && secs < 60.0;
}

// 5 -------------------------------------------------------------------------
bool desk_sharpness(std::string& detail) {
  struct Case {
    const char* name;
    InequalityId id;
    double constant;
    std::vector<EvalPoint> probes;
  };
  const std::vector<Case> cases{
      {"wirtinger2d", InequalityId::Wirtinger2D, 16.0 / kPi4, {}},
      {"diaz-metcalf1d t=a", InequalityId::DiazMetcalf1D, 4.0 / kPi2, {{0, 0}}},
      {"lupas1d", InequalityId::Lupas1D, 1.0 / kPi2, {}},
  };
  bool ok = true;
  for (const auto& c : cases) {
    ScanRequest req;
    req.id = c.id;
    req.domains = {RectDomain(0, 1, 0, 1), RectDomain(1, 3, 0, 2)};
    req.probes = c.probes;
    const ScanResult r = constant_scan(req);
    const double est = r.constant_estimate.value_or(NAN);
    const bool here = rel_close(est, c.constant, 1e-6) && r.best_fid == "extremal";
    ok = ok && here;
    detail += std::string(c.name) + " " + fmt("%.12g", est) + " vs " + fmt("%.12g", c.constant) + " by " +
              r.best_fid + "; ";
  }
  return ok;
}

// 6 -------------------------------------------------------------------------
bool falsification_probes(std::string& detail) {
  ExtremalSpec spec;
  spec.target = InequalityId::ChebyshevL2;
  spec.domain = RectDomain(0, 0.5, 0, 0.5);
  const double stated = achieved_ratio(spec, Variant::AsStated);
  const double area = achieved_ratio(spec, Variant::AreaVariant);
  const bool a = std::fabs(stated - 4.0) <= 1e-6 && std::fabs(area - 1.0) <= 1e-6;

  const RectDomain unit(0, 1, 0, 1);
  const BoundReport ost = ostrowski_2d(parse("x*y"), unit, {1, 1});
  const bool b = std::fabs(ost.lhs - 0.75) <= 1e-10 && std::fabs(ost.rhs - 4.0 / kPi2) <= 1e-10 &&
                 ost.status == Status::AssumptionsUnmet;

  const Expression xy = parse("x*y");
  const BoundReport l2 = chebyshev_l2_bound(xy, xy, unit, Variant::AsStated);
  const bool c = std::fabs(l2.lhs - 7.0 / 144.0) <= 1e-10 && l2.status == Status::AssumptionsUnmet;

  detail = "(a) as-stated " + fmt("%.10g", stated) + ", area " + fmt("%.10g", area) + "; (b) lhs " +
           fmt("%.12g", ost.lhs) + " rhs " + fmt("%.12g", ost.rhs) + " " + std::string(to_string(ost.status)) +
           "; (c) lhs " + fmt("%.12g", l2.lhs) + " " + std::string(to_string(l2.status));
  return a && b && c;
}

// 7 -------------------------------------------------------------------------
std::string run_config_with_threads(const std::vector<JobSpec>& jobs, const char* threads) {
  ::setenv("INEQ2D_THREADS", threads, 1);
  std::vector<JobOutcome> outcomes;
  for (const auto& job : jobs) outcomes.push_back(run(job));
  return strip_timestamps(batch_report(outcomes)).dump(2);
}

bool determinism(std::string& detail) {
  const std::string path = std::string(INEQ2D_SOURCE_DIR) + "/configs/acceptance.json";
  const std::vector<JobSpec> jobs = load_config(path);
  const char* saved = std::getenv("INEQ2D_THREADS");
  const std::string saved_value = saved ? saved : "";
  const std::string one = run_config_with_threads(jobs, "1");
  const std::string two = run_config_with_threads(jobs, "2");
  const std::string eight = run_config_with_threads(jobs, "8");
  if (saved) {
    ::setenv("INEQ2D_THREADS", saved_value.c_str(), 1);
  } else {
    ::unsetenv("INEQ2D_THREADS");
  }
  detail = std::to_string(jobs.size()) + " jobs, " + std::to_string(one.size()) + " bytes; 1 vs 2 " +
           (one == two ? "identical" : "differ") + ", 1 vs 8 " + (one == eight ? "identical" : "differ");
  return one == two && one == eight;
}

// 8 -------------------------------------------------------------------------
bool chebyshev_algebra(std::string& detail) {
  std::vector<Expression> fs;
  for (const char* s : corpus::algebra()) fs.push_back(parse(s));
  int checks = 0, bad = 0;
  auto expect = [&](bool cond) {
    ++checks;
    if (!cond) ++bad;
  };
  for (const RectDomain& d : {RectDomain(0, 1, 0, 1), RectDomain(1, 3, 0, 2)}) {
    std::vector<QuadResult> diag;
    for (const auto& f : fs) diag.push_back(chebyshev_functional(f, f, d, QuadConfig{}));
    for (std::size_t i = 0; i < fs.size(); ++i) {
      expect(diag[i].value >= -diag[i].error);
      for (std::size_t j = 0; j < fs.size(); ++j) {
        const QuadResult fg = chebyshev_functional(fs[i], fs[j], d, QuadConfig{});
        const QuadResult gf = chebyshev_functional(fs[j], fs[i], d, QuadConfig{});
        expect(std::fabs(fg.value - gf.value) <= fg.error + gf.error);
        for (double kappa : {-3.0, 1.0, 10.0}) {
          const QuadResult sh = chebyshev_functional(fs[i] + kappa, fs[j], d, QuadConfig{});
          expect(std::fabs(sh.value - fg.value) <= sh.error + fg.error);
        }
        const double tff = std::max(diag[i].value, 0.0), tgg = std::max(diag[j].value, 0.0);
        const double eps = fg.error + std::sqrt(diag[i].error * std::fabs(diag[j].value) +
                                                diag[j].error * std::fabs(diag[i].value) +
                                                diag[i].error * diag[j].error);
        expect(std::fabs(fg.value) <= std::sqrt(tff * tgg) + eps + 1e-15);
      }
    }
  }
  detail = std::to_string(fs.size()) + " functions x 2 domains, " + std::to_string(checks - bad) + "/" +
           std::to_string(checks) + " checks within propagated error";
  return bad == 0;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "Wirtinger extremal reproduction", extremal_reproduction);
  gate.run(2, "Quadrature exactness", quadrature_exactness);
  gate.run(3, "Derivative oracle", derivative_oracle);
  gate.run(4, "Inequality property suite", property_suite);
  gate.run(5, "Sharpness at desk scale", desk_sharpness);
  gate.run(6, "Falsification probes", falsification_probes);
  gate.run(7, "Determinism across thread counts", determinism);
  gate.run(8, "Chebyshev functional algebra", chebyshev_algebra);
  std::printf("%s: %d of 8 criteria failed\n", gate.failures ? "FAIL" : "PASS", gate.failures);
  return gate.failures ? 1 : 0;
}
