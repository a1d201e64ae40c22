#pragma once

// Extremal functions that attain (or are claimed to attain) the published
// constants, achieved ratios on them, and finite scans that estimate the best
// constant over a function family.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ineq2d/bounds.hpp"
#include "ineq2d/errors.hpp"
#include "ineq2d/expr.hpp"
#include "ineq2d/parallel.hpp"
#include "ineq2d/quad.hpp"

namespace ineq2d {

struct ExtremalSpec {
  InequalityId target = InequalityId::Wirtinger2D;
  RectDomain domain;
  Side side = Side::Left;           ///< Wirtinger only: Left = vanishing at (a, c), Right = at (b, d)
  double amplitude = 1.0;
  std::optional<EvalPoint> anchor;  ///< pointwise construction; defaults to the centre
  std::array<double, 5> K{0.0, 1.0, 1.0, 1.0, 1.0};  ///< pointwise construction: offset and piece weights

  /// Quarter-wave frequencies pi / (2 * side length).
  double omega_x() const noexcept { return std::numbers::pi / (2.0 * domain.width()); }
  double omega_y() const noexcept { return std::numbers::pi / (2.0 * domain.height()); }

  EvalPoint resolved_anchor() const noexcept { return anchor.value_or(EvalPoint{domain.mid_x(), domain.mid_y()}); }

  void validate() const {
    if (!std::isfinite(amplitude) || amplitude == 0.0) throw PreconditionError("extremal amplitude must be nonzero");
    if (target == InequalityId::Ostrowski2D) throw PreconditionError("no extremal construction for OSTROWSKI_2D");
    if (target == InequalityId::Pointwise2D && !domain.interior(resolved_anchor())) {
      throw PreconditionError("extremal anchor must lie strictly inside the domain");
    }
  }
};

struct ExtremalPair {
  Expression f;
  std::optional<Expression> g;  ///< set for the Chebyshev targets
};

namespace detail {

/// sin((pi/2) * num / den) where num is affine in one variable.
inline Expression quarter_sine(const Expression& num, double den) {
  return sin(Expression::pi() / 2.0 * (num / den));
}

inline Expression pointwise_extremal(const ExtremalSpec& s) {
  const RectDomain& D = s.domain;
  const EvalPoint p = s.resolved_anchor();
  const Expression X = Expression::x();
  const Expression Y = Expression::y();
  const double xi = p.x, eta = p.y;

  const Expression sx_left = quarter_sine(D.a() + xi - 2.0 * X, xi - D.a());
  const Expression sx_right = quarter_sine(2.0 * X - xi - D.b(), D.b() - xi);
  const Expression sy_low = quarter_sine(D.c() + eta - 2.0 * Y, eta - D.c());
  // Denominator d - eta and range eta <= y <= d (the printed d - xi / x range read symmetrically).
  const Expression sy_up = quarter_sine(2.0 * Y - eta - D.d(), D.d() - eta);

  const double tau = 2.0 * xi - D.a() - D.b();
  const double psi = 2.0 * eta - D.c() - D.d();
  const Expression u_tau = step(Expression::number(tau));
  const Expression u_neg_tau = step(Expression::number(-tau));
  const Expression u_psi = step(Expression::number(psi));
  const Expression u_neg_psi = step(Expression::number(-psi));

  // Region indicators, closed on the left/bottom piece so the sum is single-valued.
  const Expression left = step(xi - X);
  const Expression right = 1.0 - step(xi - X);
  const Expression low = step(eta - Y);
  const Expression up = 1.0 - step(eta - Y);

  const Expression pieces = s.K[1] * sx_left * sy_low * u_tau * u_psi * left * low +
                            s.K[2] * sx_right * sy_low * u_neg_tau * u_psi * right * low +
                            s.K[3] * sx_left * sy_up * u_tau * u_neg_psi * left * up +
                            s.K[4] * sx_right * sy_up * u_neg_tau * u_neg_psi * right * up;
  return s.K[0] + s.amplitude * pieces;
}

}  // namespace detail

inline ExtremalPair build_extremal(const ExtremalSpec& spec) {
  spec.validate();
  const RectDomain& D = spec.domain;
  const Expression X = Expression::x();
  const Expression Y = Expression::y();
  const double C = spec.amplitude;
  auto centred = [&] {
    return detail::quarter_sine(D.a() + D.b() - 2.0 * X, D.width()) *
           detail::quarter_sine(D.c() + D.d() - 2.0 * Y, D.height());
  };
  switch (spec.target) {
    case InequalityId::Wirtinger2D:
      if (spec.side == Side::Left) {
        return {C * detail::quarter_sine(X - D.a(), D.width()) * detail::quarter_sine(Y - D.c(), D.height()), {}};
      }
      return {C * detail::quarter_sine(D.b() - X, D.width()) * detail::quarter_sine(D.d() - Y, D.height()), {}};
    case InequalityId::Pointwise2D:
      return {detail::pointwise_extremal(spec), {}};
    case InequalityId::ChebyshevL2:
    case InequalityId::ChebyshevL2AreaVariant:
      return {C * centred(), centred()};
    case InequalityId::ChebyshevMixed:
      return {C * centred(), sgn(X - D.mid_x()) * sgn(Y - D.mid_y())};
    case InequalityId::DiazMetcalf1D:
      return {C * detail::quarter_sine(X - D.a(), D.width()), {}};
    case InequalityId::Lupas1D: {
      const Expression c = cos(Expression::pi() * ((X - D.a()) / D.width()));
      return {C * c, c};
    }
    default:
      throw PreconditionError("no extremal construction for " + std::string(to_string(spec.target)));
  }
}

/// Runs the bound matching `spec.target` on its extremal. Diaz-Metcalf uses
/// t = a; the pointwise bound uses `spec.anchor`.
inline BoundReport extremal_report(const ExtremalSpec& spec, Variant variant, const BoundOptions& opt = {}) {
  const ExtremalPair e = build_extremal(spec);
  const RectDomain& D = spec.domain;
  switch (spec.target) {
    case InequalityId::Wirtinger2D:
      return wirtinger_2d(e.f, D, spec.side, opt);
    case InequalityId::Pointwise2D:
      return pointwise_2d(e.f, D, spec.resolved_anchor(), opt);
    case InequalityId::ChebyshevL2:
      return chebyshev_l2_bound(e.f, *e.g, D, variant, opt);
    case InequalityId::ChebyshevL2AreaVariant:
      return chebyshev_l2_bound(e.f, *e.g, D, Variant::AreaVariant, opt);
    case InequalityId::ChebyshevMixed:
      return chebyshev_mixed_bound(e.f, *e.g, D, opt);
    case InequalityId::DiazMetcalf1D:
      return diaz_metcalf_1d(e.f, D.a(), D.b(), D.a(), opt);
    case InequalityId::Lupas1D:
      return lupas_1d(e.f, *e.g, D.a(), D.b(), opt);
    default:
      throw PreconditionError("no extremal construction for " + std::string(to_string(spec.target)));
  }
}

/// lhs / rhs on the extremal of `spec`.
inline double achieved_ratio(const ExtremalSpec& spec, Variant variant, const BoundOptions& opt = {}) {
  const BoundReport r = extremal_report(spec, variant, opt);
  if (!r.ratio) throw PreconditionError("achieved ratio undefined: rhs is zero");
  return *r.ratio;
}

// ---------------------------------------------------------------------------
// Scans

struct NamedExpression {
  std::string id;
  Expression expr;
};

using FamilyFn = std::function<std::vector<NamedExpression>(const RectDomain&)>;

/// sin(j pi (x-a)/(b-a)) sin(k pi (y-c)/(d-c)) for 1 <= j,k <= 3, then the same
/// products multiplied by (x-a)(b-x)(y-c)(d-y). Every member vanishes on all
/// four edges.
inline std::vector<NamedExpression> compliant_family(const RectDomain& D) {
  const Expression X = Expression::x();
  const Expression Y = Expression::y();
  const Expression bubble = (X - D.a()) * (D.b() - X) * (Y - D.c()) * (D.d() - Y);
  std::vector<NamedExpression> fam;
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        Expression f = sin(static_cast<double>(j) * Expression::pi() * ((X - D.a()) / D.width())) *
                       sin(static_cast<double>(k) * Expression::pi() * ((Y - D.c()) / D.height()));
        std::string id = "sin" + std::to_string(j) + std::to_string(k);
        if (pass == 1) {
          f = f * bubble;
          id += "*bubble";
        }
        fam.push_back({id, f});
      }
    }
  }
  return fam;
}

/// One-dimensional analogue on [a, b] (the y extent of `D` is ignored):
/// sin(j pi (x-a)/(b-a)) and its product with (x-a)(b-x), j = 1..6.
inline std::vector<NamedExpression> compliant_family_1d(const RectDomain& D) {
  const Expression X = Expression::x();
  std::vector<NamedExpression> fam;
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 1; j <= 6; ++j) {
      Expression f = sin(static_cast<double>(j) * Expression::pi() * ((X - D.a()) / D.width()));
      std::string id = "sin" + std::to_string(j);
      if (pass == 1) {
        f = f * ((X - D.a()) * (D.b() - X));
        id += "*bubble";
      }
      fam.push_back({id, f});
    }
  }
  return fam;
}

inline bool is_one_dimensional(InequalityId id) noexcept {
  return id == InequalityId::DiazMetcalf1D || id == InequalityId::Lupas1D;
}

inline bool is_pair(InequalityId id) noexcept {
  return id == InequalityId::ChebyshevL2 || id == InequalityId::ChebyshevL2AreaVariant ||
         id == InequalityId::ChebyshevMixed || id == InequalityId::Lupas1D;
}

struct ScanRequest {
  InequalityId id = InequalityId::Wirtinger2D;
  Variant variant = Variant::AsStated;  ///< CHEBYSHEV_L2 only
  Side side = Side::Left;               ///< WIRTINGER_2D only
  FamilyFn family;                      ///< empty: compliant family for the id
  FamilyFn g_family;                    ///< pair bounds; empty: same as family
  std::vector<RectDomain> domains;
  /// Anchor / evaluation point / t in coordinates relative to each domain
  /// ((0,0) = (a,c), (1,1) = (b,d)). Empty: centre, or t = a for Diaz-Metcalf.
  std::vector<EvalPoint> probes;
  bool include_extremal = true;
  BoundOptions options;
};

struct ScanRow {
  RectDomain domain;
  std::optional<EvalPoint> point;
  std::string fid;
  std::string gid;
  double lhs = 0.0;
  double rhs = 0.0;
  std::optional<double> ratio;
  double eps = 0.0;
  Status status = Status::Inconclusive;
  double constant = 0.0;  ///< published constant for this row's form of the bound
};

struct ScanResult {
  InequalityId id = InequalityId::Wirtinger2D;
  std::optional<Variant> variant;
  std::vector<ScanRow> rows;           ///< canonical order: domain, probe, f, g
  std::optional<double> max_ratio;     ///< over admissible rows (HOLDS / VIOLATED)
  std::optional<double> constant_estimate;  ///< max over admissible rows of ratio * constant
  std::string best_fid;
  std::string best_gid;
};

inline ScanResult constant_scan(const ScanRequest& req) {
  if (req.domains.empty()) throw PreconditionError("constant_scan needs at least one domain");
  const bool one_d = is_one_dimensional(req.id);
  const FamilyFn family = req.family ? req.family : (one_d ? FamilyFn(compliant_family_1d) : FamilyFn(compliant_family));
  const FamilyFn g_family = req.g_family ? req.g_family : family;
  const InequalityId effective_id =
      req.id == InequalityId::ChebyshevL2 && req.variant == Variant::AreaVariant ? InequalityId::ChebyshevL2AreaVariant
                                                                                  : req.id;

  std::vector<EvalPoint> probes = req.probes;
  if (probes.empty()) probes.push_back(req.id == InequalityId::DiazMetcalf1D ? EvalPoint{0.0, 0.0} : EvalPoint{0.5, 0.5});
  const bool uses_point = req.id == InequalityId::Pointwise2D || req.id == InequalityId::Ostrowski2D ||
                          req.id == InequalityId::DiazMetcalf1D;
  if (!uses_point) probes.resize(1);

  struct Task {
    RectDomain domain;
    EvalPoint point;
    NamedExpression f;
    std::optional<NamedExpression> g;
  };
  std::vector<Task> tasks;
  for (const RectDomain& D : req.domains) {
    const auto fs = family(D);
    if (fs.empty()) throw PreconditionError("constant_scan needs a nonempty family");
    const auto gs = g_family(D);
    for (const EvalPoint& rel : probes) {
      const EvalPoint p{D.a() + rel.x * D.width(), D.c() + rel.y * D.height()};
      // There is no extremal construction for the Ostrowski bound.
      if (req.include_extremal && req.id != InequalityId::Ostrowski2D) {
        ExtremalSpec spec;
        spec.target = effective_id;
        spec.domain = D;
        spec.side = req.side;
        if (req.id == InequalityId::Pointwise2D) spec.anchor = p;
        const ExtremalPair e = build_extremal(spec);
        std::optional<NamedExpression> g;
        if (e.g) g = NamedExpression{"extremal", *e.g};
        tasks.push_back({D, p, {"extremal", e.f}, g});
      }
      for (const auto& f : fs) {
        if (is_pair(req.id)) {
          for (const auto& g : gs) tasks.push_back({D, p, f, g});
        } else {
          tasks.push_back({D, p, f, std::nullopt});
        }
      }
    }
  }

  BoundOptions inner = req.options;
  const unsigned threads = resolve_threads(inner.quad.threads);
  inner.quad.threads = 1;
  std::vector<ScanRow> rows(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const Task& t = tasks[i];
    const RectDomain& D = t.domain;
    BoundReport r;
    double constant = published_constant(effective_id);
    switch (req.id) {
      case InequalityId::Wirtinger2D: r = wirtinger_2d(t.f.expr, D, req.side, inner); break;
      case InequalityId::Pointwise2D: r = pointwise_2d(t.f.expr, D, t.point, inner); break;
      case InequalityId::ChebyshevL2:
      case InequalityId::ChebyshevL2AreaVariant:
        r = chebyshev_l2_bound(t.f.expr, t.g->expr, D,
                               effective_id == InequalityId::ChebyshevL2 ? Variant::AsStated : Variant::AreaVariant,
                               inner);
        break;
      case InequalityId::ChebyshevMixed: r = chebyshev_mixed_bound(t.f.expr, t.g->expr, D, inner); break;
      case InequalityId::Ostrowski2D:
        r = ostrowski_2d(t.f.expr, D, t.point, inner);
        if (t.point.x == D.mid_x() && t.point.y == D.mid_y()) constant = 1.0 / (std::numbers::pi * std::numbers::pi);
        break;
      case InequalityId::DiazMetcalf1D: r = diaz_metcalf_1d(t.f.expr, D.a(), D.b(), t.point.x, inner); break;
      case InequalityId::Lupas1D: r = lupas_1d(t.f.expr, t.g->expr, D.a(), D.b(), inner); break;
    }
    ScanRow& row = rows[i];
    row.domain = D;
    if (uses_point) row.point = t.point;
    row.fid = t.f.id;
    row.gid = t.g ? t.g->id : "";
    row.lhs = r.lhs;
    row.rhs = r.rhs;
    row.ratio = r.ratio;
    row.eps = r.eps;
    row.status = r.status;
    row.constant = constant;
  });

  ScanResult out;
  out.id = effective_id;
  if (req.id == InequalityId::ChebyshevL2 || req.id == InequalityId::ChebyshevL2AreaVariant) {
    out.variant = effective_id == InequalityId::ChebyshevL2 ? Variant::AsStated : Variant::AreaVariant;
  }
  for (const ScanRow& row : rows) {
    const bool admissible = row.status == Status::Holds || row.status == Status::Violated;
    if (!admissible || !row.ratio) continue;
    if (!out.max_ratio || *row.ratio > *out.max_ratio) {
      out.max_ratio = *row.ratio;
      out.best_fid = row.fid;
      out.best_gid = row.gid;
    }
    const double implied = *row.ratio * row.constant;
    if (!out.constant_estimate || implied > *out.constant_estimate) out.constant_estimate = implied;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace ineq2d
