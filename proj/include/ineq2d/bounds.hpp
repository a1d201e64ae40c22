#pragma once

// Left/right-hand sides of the double-integral Wirtinger, Chebyshev (Gruss)
// and Ostrowski bounds, the 1D Diaz-Metcalf and Lupas baselines, and the
// hypothesis checkers that decide whether a computed ratio is admissible.
//
// Hypothesis checks never short-circuit the computation: every report carries
// lhs, rhs and ratio, and `status` separates a genuine violation from a
// failed hypothesis.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineq2d/errors.hpp"
#include "ineq2d/expr.hpp"
#include "ineq2d/quad.hpp"

namespace ineq2d {

enum class InequalityId {
  Wirtinger2D,
  Pointwise2D,
  ChebyshevL2,
  ChebyshevL2AreaVariant,
  ChebyshevMixed,
  Ostrowski2D,
  DiazMetcalf1D,
  Lupas1D,
};

/// Normalization used by the L2 Chebyshev bound: the printed (b-a)^2 (d-c)^2
/// factor, or the area factor (b-a)(d-c).
enum class Variant { AsStated, AreaVariant };

enum class Status { Holds, Violated, AssumptionsUnmet, Inconclusive };

enum class Side { Left, Right };

/// Weak: the function vanishes on the relevant edges. Strict: its first
/// partials vanish there too.
enum class HypothesisMode { Weak, Strict };

inline constexpr std::string_view to_string(InequalityId id) noexcept {
  switch (id) {
    case InequalityId::Wirtinger2D: return "WIRTINGER_2D";
    case InequalityId::Pointwise2D: return "POINTWISE_2D";
    case InequalityId::ChebyshevL2: return "CHEBYSHEV_L2";
    case InequalityId::ChebyshevL2AreaVariant: return "CHEBYSHEV_L2_AREA_VARIANT";
    case InequalityId::ChebyshevMixed: return "CHEBYSHEV_MIXED";
    case InequalityId::Ostrowski2D: return "OSTROWSKI_2D";
    case InequalityId::DiazMetcalf1D: return "DIAZ_METCALF_1D";
    default: return "LUPAS_1D";
  }
}

inline constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Holds: return "HOLDS";
    case Status::Violated: return "VIOLATED";
    case Status::AssumptionsUnmet: return "ASSUMPTIONS_UNMET";
    default: return "INCONCLUSIVE";
  }
}

inline constexpr std::string_view to_string(Variant v) noexcept {
  return v == Variant::AsStated ? "as-stated" : "area-variant";
}

inline constexpr std::string_view to_string(Side s) noexcept { return s == Side::Left ? "left" : "right"; }

inline constexpr std::string_view to_string(HypothesisMode m) noexcept {
  return m == HypothesisMode::Weak ? "weak" : "strict";
}

/// Constant in front of each bound, as published.
inline constexpr double published_constant(InequalityId id) noexcept {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  switch (id) {
    case InequalityId::Wirtinger2D:
    case InequalityId::Pointwise2D:
      return 16.0 / (pi2 * pi2);
    case InequalityId::ChebyshevL2:
    case InequalityId::ChebyshevL2AreaVariant:
      return 1.0 / (pi2 * pi2);
    case InequalityId::ChebyshevMixed:
    case InequalityId::Ostrowski2D:
    case InequalityId::DiazMetcalf1D:
      return 4.0 / pi2;
    default:
      return 1.0 / pi2;
  }
}

/// (hi - lo)/2 + |t - (lo + hi)/2|: the anchor-dependent length factor of the
/// pointwise, Ostrowski and Diaz-Metcalf bounds. Equals max(t - lo, hi - t).
inline double anchor_bracket(double lo, double hi, double t) noexcept {
  return 0.5 * (hi - lo) + std::fabs(t - 0.5 * (lo + hi));
}

// ---------------------------------------------------------------------------
// Hypotheses

/// Edge residuals of one function on one rectangle.
struct FunctionCheck {
  std::string subject;
  RectDomain domain;
  bool smooth = true;
  double tolerance = 0.0;
  std::array<double, 4> residual{};  ///< max|f| on x=a, x=b, y=c, y=d
  std::optional<std::array<double, 4>> residual_dx;  ///< strict mode only
  std::optional<std::array<double, 4>> residual_dy;  ///< strict mode only
  bool weak_left = false;     ///< f(a,.) = f(.,c) = 0
  bool weak_right = false;    ///< f(b,.) = f(.,d) = 0
  bool strict_left = false;   ///< weak_left and f_x, f_y vanish there too
  bool strict_right = false;

  bool vanishes(Edge e, HypothesisMode mode) const {
    const auto i = static_cast<std::size_t>(e);
    if (residual[i] > tolerance) return false;
    if (mode == HypothesisMode::Weak) return true;
    return residual_dx && residual_dy && (*residual_dx)[i] <= tolerance && (*residual_dy)[i] <= tolerance;
  }

  bool side_ok(Side s, HypothesisMode mode) const {
    if (mode == HypothesisMode::Weak) return s == Side::Left ? weak_left : weak_right;
    return s == Side::Left ? strict_left : strict_right;
  }
};

struct AssumptionReport {
  HypothesisMode mode = HypothesisMode::Weak;
  std::vector<FunctionCheck> checks;
  std::optional<RangeEstimate> range;  ///< range of g for the mixed bound
  std::vector<std::string> unmet;      ///< failed requirements, empty when satisfied

  bool satisfied() const noexcept { return unmet.empty(); }
};

struct BoundOptions {
  QuadConfig quad;
  HypothesisMode mode = HypothesisMode::Weak;
  int boundary_samples = 257;
  int range_grid = 201;
};

namespace detail {

inline double max_abs_on_grid(const Expression& f, const RectDomain& dom, int n = 33) {
  double m = 0.0;
  for (int j = 0; j < n; ++j) {
    const double y = j == n - 1 ? dom.d() : dom.c() + dom.height() * j / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double x = i == n - 1 ? dom.b() : dom.a() + dom.width() * i / (n - 1);
      m = std::max(m, std::fabs(f(x, y)));
    }
  }
  return m;
}

inline std::array<double, 4> edge_residuals(const Expression& f, const RectDomain& dom, int samples) {
  std::array<double, 4> r{};
  for (Edge e : kAllEdges) r[static_cast<std::size_t>(e)] = boundary_residual(f, dom, e, samples);
  return r;
}

}  // namespace detail

/// Residuals of `f` on the four edges of `dom`. A condition holds when its
/// residual is <= 1e-8 * (1 + max|f| on a 33x33 grid).
inline FunctionCheck check_function(const Expression& f, const RectDomain& dom, HypothesisMode mode,
                                    std::string subject = "f", int samples = 257) {
  FunctionCheck c;
  c.subject = std::move(subject);
  c.domain = dom;
  c.smooth = f.smooth();
  c.tolerance = 1e-8 * (1.0 + detail::max_abs_on_grid(f, dom));
  c.residual = detail::edge_residuals(f, dom, samples);
  if (mode == HypothesisMode::Strict) {
    c.residual_dx = detail::edge_residuals(differentiate(f, Var::X), dom, samples);
    c.residual_dy = detail::edge_residuals(differentiate(f, Var::Y), dom, samples);
  }
  c.weak_left = c.vanishes(Edge::XA, HypothesisMode::Weak) && c.vanishes(Edge::YC, HypothesisMode::Weak);
  c.weak_right = c.vanishes(Edge::XB, HypothesisMode::Weak) && c.vanishes(Edge::YD, HypothesisMode::Weak);
  if (mode == HypothesisMode::Strict) {
    c.strict_left = c.vanishes(Edge::XA, mode) && c.vanishes(Edge::YC, mode);
    c.strict_right = c.vanishes(Edge::XB, mode) && c.vanishes(Edge::YD, mode);
  }
  return c;
}

inline AssumptionReport check_assumptions(const Expression& f, const RectDomain& dom, HypothesisMode mode,
                                          int samples = 257) {
  AssumptionReport r;
  r.mode = mode;
  r.checks.push_back(check_function(f, dom, mode, "f", samples));
  return r;
}

namespace detail {

inline void require_side(AssumptionReport& r, const FunctionCheck& c, Side s) {
  if (!c.side_ok(s, r.mode)) {
    r.unmet.push_back(c.subject + ": " + std::string(to_string(r.mode)) + "-" + std::string(to_string(s)) +
                      " boundary conditions fail");
  }
}

/// Checks f - f(p) on the (up to four) subrectangles cut by the lines x = p.x
/// and y = p.y. Each subrectangle must have the shifted function vanishing on
/// one x-edge and one y-edge, which is what the two-sided Wirtinger bound needs
/// on that piece.
inline void require_anchor_split(AssumptionReport& r, const Expression& f, const RectDomain& dom, EvalPoint p,
                                 int samples) {
  const Expression shifted = f - Expression::number(f(p));
  const double xs[3] = {dom.a(), p.x, dom.b()};
  const double ys[3] = {dom.c(), p.y, dom.d()};
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      if (!(xs[i] < xs[i + 1]) || !(ys[j] < ys[j + 1])) continue;
      const RectDomain sub(xs[i], xs[i + 1], ys[j], ys[j + 1]);
      static constexpr const char* kNames[2][2] = {{"lower-left", "lower-right"}, {"upper-left", "upper-right"}};
      FunctionCheck c = check_function(shifted, sub, r.mode, std::string("f - f(anchor) on ") + kNames[j][i], samples);
      const bool x_ok = c.vanishes(Edge::XA, r.mode) || c.vanishes(Edge::XB, r.mode);
      const bool y_ok = c.vanishes(Edge::YC, r.mode) || c.vanishes(Edge::YD, r.mode);
      if (!(x_ok && y_ok)) {
        r.unmet.push_back(c.subject + ": does not vanish on an x-edge and a y-edge");
      }
      r.checks.push_back(std::move(c));
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reports

struct NamedQuad {
  std::string name;
  QuadResult result;
};

struct BoundReport {
  InequalityId id = InequalityId::Wirtinger2D;
  std::optional<Variant> variant;
  std::optional<Side> side;
  RectDomain domain;
  std::optional<EvalPoint> point;  ///< anchor, evaluation point, or (t, 0) in 1D
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<double> ratio;     ///< empty when rhs == 0
  double eps = 0.0;                ///< propagated quadrature error budget
  AssumptionReport assumptions;
  Status status = Status::Inconclusive;
  bool range_estimated = false;    ///< rhs uses inner range estimates of g
  bool smooth_inputs = true;       ///< false: derivatives are a.e. only
  std::vector<NamedQuad> integrals;
};

/// HOLDS/VIOLATED threshold: lhs <= rhs * (1 + kRelativeSlack) + eps.
inline constexpr double kRelativeSlack = 1e-8;

namespace detail {

inline double sqrt_error(double v, double err) {
  v = std::max(v, 0.0);
  if (v == 0.0) return std::sqrt(err);
  return std::min(err / (2.0 * std::sqrt(v)), std::sqrt(err));
}

inline double product_error(double a, double ea, double b, double eb) {
  return std::fabs(a) * eb + std::fabs(b) * ea + ea * eb;
}

inline void finalize(BoundReport& r) {
  const bool inconclusive =
      std::any_of(r.integrals.begin(), r.integrals.end(), [](const NamedQuad& q) { return !q.result.converged; });
  if (r.rhs > 0.0) r.ratio = r.lhs / r.rhs;
  if (inconclusive) {
    r.status = Status::Inconclusive;
  } else if (!r.assumptions.satisfied()) {
    r.status = Status::AssumptionsUnmet;
  } else if (r.lhs <= r.rhs * (1.0 + kRelativeSlack) + r.eps) {
    r.status = Status::Holds;
  } else {
    r.status = Status::Violated;
  }
}

inline void require_one_dimensional(const Expression& f, const char* name) {
  if (f.depends_on(Var::Y)) throw PreconditionError(std::string(name) + " must not depend on y in a 1D bound");
}

struct ChebyshevParts {
  QuadResult fg, f, g;
  double value = 0.0;
  double error = 0.0;
};

inline ChebyshevParts chebyshev_parts(const Expression& f, const Expression& g, const RectDomain& dom,
                                      const QuadConfig& cfg) {
  ChebyshevParts p;
  p.fg = integrate_function([&](double x, double y) { return f(x, y) * g(x, y); }, dom, cfg,
                            split_hints({&f, &g}, dom));
  p.f = integrate(f, dom, cfg);
  p.g = integrate(g, dom, cfg);
  const double area = dom.area();
  const double mf = p.f.value / area;
  const double mg = p.g.value / area;
  p.value = p.fg.value / area - mf * mg;
  p.error = p.fg.error / area + product_error(mf, p.f.error / area, mg, p.g.error / area);
  return p;
}

}  // namespace detail

/// T(f,g) = mean(fg) - mean(f) mean(g) over the rectangle.
inline QuadResult chebyshev_functional(const Expression& f, const Expression& g, const RectDomain& dom,
                                       const QuadConfig& cfg) {
  const auto p = detail::chebyshev_parts(f, g, dom, cfg);
  QuadResult r;
  r.value = p.value;
  r.error = p.error;
  r.panels = p.fg.panels + p.f.panels + p.g.panels;
  r.converged = p.fg.converged && p.f.converged && p.g.converged;
  return r;
}

/// int f^2 <= (16/pi^4) (b-a)^2 (d-c)^2 int (f_xy)^2, for f vanishing on the
/// left/bottom edges (side = Left) or the right/top edges (side = Right).
inline BoundReport wirtinger_2d(const Expression& f, const RectDomain& dom, Side side, const BoundOptions& opt = {}) {
  BoundReport r;
  r.id = InequalityId::Wirtinger2D;
  r.side = side;
  r.domain = dom;
  r.smooth_inputs = f.smooth();
  r.assumptions.mode = opt.mode;
  r.assumptions.checks.push_back(check_function(f, dom, opt.mode, "f", opt.boundary_samples));
  detail::require_side(r.assumptions, r.assumptions.checks.back(), side);

  const Expression fxy = mixed_partial(f);
  const QuadResult lhs = l2_norm_sq(f, dom, opt.quad);
  const QuadResult norm = l2_norm_sq(fxy, dom, opt.quad);
  const double scale = published_constant(r.id) * dom.area() * dom.area();
  r.lhs = lhs.value;
  r.rhs = scale * norm.value;
  r.eps = lhs.error + scale * norm.error;
  r.integrals = {{"int f^2", lhs}, {"int (f_xy)^2", norm}};
  detail::finalize(r);
  return r;
}

/// int |f - f(anchor)|^2 <= (16/pi^4) Bx^2 By^2 int (f_xy)^2 with
/// Bx = (b-a)/2 + |xi - (a+b)/2| and By likewise; anchor strictly interior.
inline BoundReport pointwise_2d(const Expression& f, const RectDomain& dom, EvalPoint anchor,
                                const BoundOptions& opt = {}) {
  if (!dom.interior(anchor)) throw PreconditionError("pointwise_2d: anchor must lie strictly inside the domain");
  BoundReport r;
  r.id = InequalityId::Pointwise2D;
  r.domain = dom;
  r.point = anchor;
  r.smooth_inputs = f.smooth();
  r.assumptions.mode = opt.mode;
  detail::require_anchor_split(r.assumptions, f, dom, anchor, opt.boundary_samples);

  const double f0 = f(anchor);
  const SplitHints hints = split_hints({&f}, dom, SplitHints{{anchor.x}, {anchor.y}});
  const QuadResult lhs = integrate_function(
      [&](double x, double y) {
        const double v = f(x, y) - f0;
        return v * v;
      },
      dom, opt.quad, hints);
  const Expression fxy = mixed_partial(f);
  const QuadResult norm = l2_norm_sq(fxy, dom, opt.quad, SplitHints{{anchor.x}, {anchor.y}});
  const double bx = anchor_bracket(dom.a(), dom.b(), anchor.x);
  const double by = anchor_bracket(dom.c(), dom.d(), anchor.y);
  const double scale = published_constant(r.id) * bx * bx * by * by;
  r.lhs = lhs.value;
  r.rhs = scale * norm.value;
  r.eps = lhs.error + scale * norm.error;
  r.integrals = {{"int |f - f(anchor)|^2", lhs}, {"int (f_xy)^2", norm}};
  detail::finalize(r);
  return r;
}

/// |T(f,g)| <= (1/pi^4) L ||f_xy||_2 ||g_xy||_2 with L = (b-a)^2 (d-c)^2
/// (as stated) or L = (b-a)(d-c) (area variant).
inline BoundReport chebyshev_l2_bound(const Expression& f, const Expression& g, const RectDomain& dom,
                                      Variant variant, const BoundOptions& opt = {}) {
  BoundReport r;
  r.id = variant == Variant::AsStated ? InequalityId::ChebyshevL2 : InequalityId::ChebyshevL2AreaVariant;
  r.variant = variant;
  r.domain = dom;
  r.smooth_inputs = f.smooth() && g.smooth();
  r.assumptions.mode = opt.mode;
  r.assumptions.checks.push_back(check_function(f, dom, opt.mode, "f", opt.boundary_samples));
  r.assumptions.checks.push_back(check_function(g, dom, opt.mode, "g", opt.boundary_samples));
  for (const auto& c : std::vector<FunctionCheck>(r.assumptions.checks)) {
    detail::require_side(r.assumptions, c, Side::Left);
    detail::require_side(r.assumptions, c, Side::Right);
  }

  const auto t = detail::chebyshev_parts(f, g, dom, opt.quad);
  const QuadResult nf = l2_norm_sq(mixed_partial(f), dom, opt.quad);
  const QuadResult ng = l2_norm_sq(mixed_partial(g), dom, opt.quad);
  const double area = dom.area();
  const double scale = published_constant(r.id) * (variant == Variant::AsStated ? area * area : area);
  const double norm_f = std::sqrt(std::max(nf.value, 0.0));
  const double norm_g = std::sqrt(std::max(ng.value, 0.0));
  r.lhs = std::fabs(t.value);
  r.rhs = scale * norm_f * norm_g;
  r.eps = t.error + scale * detail::product_error(norm_f, detail::sqrt_error(nf.value, nf.error), norm_g,
                                                  detail::sqrt_error(ng.value, ng.error));
  r.integrals = {{"int f g", t.fg}, {"int f", t.f}, {"int g", t.g}, {"int (f_xy)^2", nf}, {"int (g_xy)^2", ng}};
  detail::finalize(r);
  return r;
}

/// |T(f,g)| <= (4/pi^2) sqrt(b-a) sqrt(d-c) (Gamma - gamma) ||f_xy||_2 for g
/// with values in [gamma, Gamma]. (gamma, Gamma) are inner estimates from
/// range_bounds, so the report is flagged `range_estimated`.
inline BoundReport chebyshev_mixed_bound(const Expression& f, const Expression& g, const RectDomain& dom,
                                         const BoundOptions& opt = {}) {
  BoundReport r;
  r.id = InequalityId::ChebyshevMixed;
  r.domain = dom;
  r.smooth_inputs = f.smooth();
  r.range_estimated = true;
  r.assumptions.mode = opt.mode;
  r.assumptions.checks.push_back(check_function(f, dom, opt.mode, "f", opt.boundary_samples));
  detail::require_side(r.assumptions, r.assumptions.checks.back(), Side::Left);
  detail::require_side(r.assumptions, r.assumptions.checks.back(), Side::Right);
  const RangeEstimate range = range_bounds(g, dom, opt.range_grid);
  r.assumptions.range = range;

  const auto t = detail::chebyshev_parts(f, g, dom, opt.quad);
  const QuadResult nf = l2_norm_sq(mixed_partial(f), dom, opt.quad);
  const double norm_f = std::sqrt(std::max(nf.value, 0.0));
  const double scale = published_constant(r.id) * std::sqrt(dom.width()) * std::sqrt(dom.height()) * range.spread();
  r.lhs = std::fabs(t.value);
  r.rhs = scale * norm_f;
  r.eps = t.error + scale * detail::sqrt_error(nf.value, nf.error);
  r.integrals = {{"int f g", t.fg}, {"int f", t.f}, {"int g", t.g}, {"int (f_xy)^2", nf}};
  detail::finalize(r);
  return r;
}

/// |f(p) - mean(f)| <= 4/(pi^2 sqrt(area)) Bx By ||f_xy||_2 for p in the
/// closed rectangle. At the centre this is (1/pi^2) sqrt(area) ||f_xy||_2.
/// The hypotheses are those of the pointwise bound at p.
inline BoundReport ostrowski_2d(const Expression& f, const RectDomain& dom, EvalPoint point,
                                const BoundOptions& opt = {}) {
  if (!dom.contains(point)) throw PreconditionError("ostrowski_2d: point must lie in the closed domain");
  BoundReport r;
  r.id = InequalityId::Ostrowski2D;
  r.domain = dom;
  r.point = point;
  r.smooth_inputs = f.smooth();
  r.assumptions.mode = opt.mode;
  detail::require_anchor_split(r.assumptions, f, dom, point, opt.boundary_samples);

  const SplitHints at_point{{point.x}, {point.y}};
  const QuadResult mean = integrate(f, dom, opt.quad, at_point);
  const QuadResult nf = l2_norm_sq(mixed_partial(f), dom, opt.quad, at_point);
  const double area = dom.area();
  const double norm_f = std::sqrt(std::max(nf.value, 0.0));
  const double scale = published_constant(r.id) / std::sqrt(area) * anchor_bracket(dom.a(), dom.b(), point.x) *
                       anchor_bracket(dom.c(), dom.d(), point.y);
  r.lhs = std::fabs(f(point) - mean.value / area);
  r.rhs = scale * norm_f;
  r.eps = mean.error / area + scale * detail::sqrt_error(nf.value, nf.error);
  r.integrals = {{"int f", mean}, {"int (f_xy)^2", nf}};
  detail::finalize(r);
  return r;
}

/// 1D: int_a^b (f(x) - f(t))^2 <= (4/pi^2) [(b-a)/2 + |t - (a+b)/2|]^2 int f'^2.
/// One-dimensional integrals run on the strip [a,b] x [0,1].
inline BoundReport diaz_metcalf_1d(const Expression& f, double a, double b, double t, const BoundOptions& opt = {}) {
  detail::require_one_dimensional(f, "f");
  const RectDomain strip(a, b, 0.0, 1.0);
  if (!(t >= a && t <= b)) throw PreconditionError("diaz_metcalf_1d: t must lie in [a, b]");
  BoundReport r;
  r.id = InequalityId::DiazMetcalf1D;
  r.domain = strip;
  r.point = EvalPoint{t, 0.0};
  r.smooth_inputs = f.smooth();
  r.assumptions.mode = opt.mode;

  const double ft = f(t, 0.0);
  const SplitHints at_t{{t}, {}};
  const QuadResult lhs = integrate_function(
      [&](double x, double y) {
        const double v = f(x, y) - ft;
        return v * v;
      },
      strip, opt.quad, split_hints({&f}, strip, at_t));
  const QuadResult norm = l2_norm_sq(differentiate(f, Var::X), strip, opt.quad, at_t);
  const double bracket = anchor_bracket(a, b, t);
  const double scale = published_constant(r.id) * bracket * bracket;
  r.lhs = lhs.value;
  r.rhs = scale * norm.value;
  r.eps = lhs.error + scale * norm.error;
  r.integrals = {{"int (f - f(t))^2", lhs}, {"int f'^2", norm}};
  detail::finalize(r);
  return r;
}

/// 1D: |T(f,g)| <= ((b-a)/pi^2) ||f'||_2 ||g'||_2.
inline BoundReport lupas_1d(const Expression& f, const Expression& g, double a, double b,
                            const BoundOptions& opt = {}) {
  detail::require_one_dimensional(f, "f");
  detail::require_one_dimensional(g, "g");
  const RectDomain strip(a, b, 0.0, 1.0);
  BoundReport r;
  r.id = InequalityId::Lupas1D;
  r.domain = strip;
  r.smooth_inputs = f.smooth() && g.smooth();
  r.assumptions.mode = opt.mode;

  const auto t = detail::chebyshev_parts(f, g, strip, opt.quad);
  const QuadResult nf = l2_norm_sq(differentiate(f, Var::X), strip, opt.quad);
  const QuadResult ng = l2_norm_sq(differentiate(g, Var::X), strip, opt.quad);
  const double norm_f = std::sqrt(std::max(nf.value, 0.0));
  const double norm_g = std::sqrt(std::max(ng.value, 0.0));
  const double scale = published_constant(r.id) * (b - a);
  r.lhs = std::fabs(t.value);
  r.rhs = scale * norm_f * norm_g;
  r.eps = t.error + scale * detail::product_error(norm_f, detail::sqrt_error(nf.value, nf.error), norm_g,
                                                  detail::sqrt_error(ng.value, ng.error));
  r.integrals = {{"int f g", t.fg}, {"int f", t.f}, {"int g", t.g}, {"int f'^2", nf}, {"int g'^2", ng}};
  detail::finalize(r);
  return r;
}

}  // namespace ineq2d
