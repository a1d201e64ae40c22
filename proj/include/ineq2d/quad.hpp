#pragma once

// Adaptive tensor-product Gauss-Legendre cubature over rectangles, plus the
// sampling helpers (range estimates, edge residuals) used by the bound checks.
//
// Results are bit-identical for any worker count: panel values are pure
// functions of panel geometry, refinement decisions are made sequentially in
// a fixed order, and the final sum runs over panels sorted row-major by origin.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "ineq2d/errors.hpp"
#include "ineq2d/expr.hpp"
#include "ineq2d/golden.hpp"
#include "ineq2d/parallel.hpp"

namespace ineq2d {

/// Closed rectangle [a,b] x [c,d] with a < b and c < d.
class RectDomain {
 public:
  RectDomain() = default;
  RectDomain(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d))) {
      throw PreconditionError("domain endpoints must be finite");
    }
    if (!(a < b) || !(c < d)) throw PreconditionError("domain requires a < b and c < d");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }
  double width() const noexcept { return b_ - a_; }
  double height() const noexcept { return d_ - c_; }
  double area() const noexcept { return width() * height(); }
  double mid_x() const noexcept { return 0.5 * (a_ + b_); }
  double mid_y() const noexcept { return 0.5 * (c_ + d_); }

  bool contains(EvalPoint p) const noexcept { return p.x >= a_ && p.x <= b_ && p.y >= c_ && p.y <= d_; }
  bool interior(EvalPoint p) const noexcept { return p.x > a_ && p.x < b_ && p.y > c_ && p.y < d_; }

  friend bool operator==(const RectDomain&, const RectDomain&) = default;

 private:
  double a_ = 0.0, b_ = 1.0, c_ = 0.0, d_ = 1.0;
};

struct QuadConfig {
  int points = 20;           ///< Gauss-Legendre points per axis per panel
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 4096;
  int initial_splits = 1;    ///< uniform initial grid cells per axis
  unsigned threads = 0;      ///< 0 = automatic (INEQ2D_THREADS, then hardware)

  void validate() const {
    if (points < 2) throw PreconditionError("gl-points must be >= 2");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw PreconditionError("tolerances must be > 0");
    if (max_panels < 1) throw PreconditionError("max-panels must be >= 1");
    if (initial_splits < 1) throw PreconditionError("initial-splits must be >= 1");
  }
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  ///< a-posteriori estimate, >= 0
  int panels = 0;
  bool converged = true;
};

/// Extra panel boundaries to seed before refinement (discontinuity lines).
struct SplitHints {
  std::vector<double> x;
  std::vector<double> y;
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

namespace detail {

inline GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    // Final derivative at the converged node.
    double p0 = 1.0;
    double p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct Panel {
  double x0, x1, y0, y1;
  double value;
  double error;
};

}  // namespace detail

/// n-point Gauss-Legendre rule on [-1, 1]. Rules are computed once and cached.
inline const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw PreconditionError("Gauss-Legendre order must be >= 1");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::compute_gauss_legendre(n)).first;
  return it->second;
}

/// Single-panel tensor Gauss-Legendre sum over [x0,x1] x [y0,y1]. `abs_sum`
/// receives the same sum taken over |f|, used as a round-off scale.
template <class F>
double tensor_gauss(F& f, const GaussRule& rule, double x0, double x1, double y0, double y1,
                    double* abs_sum = nullptr) {
  const double hx = 0.5 * (x1 - x0);
  const double hy = 0.5 * (y1 - y0);
  const double cx = 0.5 * (x1 + x0);
  const double cy = 0.5 * (y1 + y0);
  const std::size_t n = rule.nodes.size();
  double total = 0.0;
  double total_abs = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double y = cy + hy * rule.nodes[j];
    double row = 0.0;
    double row_abs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = rule.weights[i] * f(cx + hx * rule.nodes[i], y);
      row += v;
      row_abs += std::fabs(v);
    }
    total += rule.weights[j] * row;
    total_abs += rule.weights[j] * row_abs;
  }
  if (abs_sum) *abs_sum = total_abs * hx * hy;
  return total * hx * hy;
}

/// Adaptive cubature of a callable f(x, y) -> double.
///
/// Each panel is compared against its 2x2 subdivision; the subdivided value is
/// kept and the difference (plus a round-off floor) is the panel error. The
/// largest-error panels are split until the summed error meets
/// max(abs_tol, rel_tol * |value|) or the panel budget is exhausted.
template <class F>
QuadResult integrate_function(F&& f, const RectDomain& dom, const QuadConfig& cfg, const SplitHints& hints = {}) {
  cfg.validate();
  const GaussRule& rule = gauss_legendre(cfg.points);
  const unsigned threads = resolve_threads(cfg.threads);
  constexpr double kRoundoff = 100.0 * 2.220446049250313e-16;
  constexpr std::size_t kBatch = 16;

  auto breakpoints = [&](double lo, double hi, const std::vector<double>& extra) {
    std::vector<double> pts;
    for (int i = 0; i <= cfg.initial_splits; ++i) {
      pts.push_back(i == cfg.initial_splits ? hi : lo + (hi - lo) * i / cfg.initial_splits);
    }
    for (double h : extra) {
      if (h > lo && h < hi) pts.push_back(h);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  };
  const std::vector<double> xs = breakpoints(dom.a(), dom.b(), hints.x);
  const std::vector<double> ys = breakpoints(dom.c(), dom.d(), hints.y);

  auto evaluate = [&](double x0, double x1, double y0, double y1) {
    const double coarse = tensor_gauss(f, rule, x0, x1, y0, y1);
    const double xm = 0.5 * (x0 + x1);
    const double ym = 0.5 * (y0 + y1);
    double fine = 0.0;
    double scale = 0.0;
    double part_abs = 0.0;
    fine += tensor_gauss(f, rule, x0, xm, y0, ym, &part_abs);
    scale += part_abs;
    fine += tensor_gauss(f, rule, xm, x1, y0, ym, &part_abs);
    scale += part_abs;
    fine += tensor_gauss(f, rule, x0, xm, ym, y1, &part_abs);
    scale += part_abs;
    fine += tensor_gauss(f, rule, xm, x1, ym, y1, &part_abs);
    scale += part_abs;
    return detail::Panel{x0, x1, y0, y1, fine, std::fabs(fine - coarse) + kRoundoff * scale};
  };

  std::vector<detail::Panel> panels;
  std::vector<char> alive;
  {
    struct Cell {
      double x0, x1, y0, y1;
    };
    std::vector<Cell> cells;
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) cells.push_back({xs[i], xs[i + 1], ys[j], ys[j + 1]});
    }
    panels.resize(cells.size());
    parallel_for(cells.size(), threads, [&](std::size_t k) {
      panels[k] = evaluate(cells[k].x0, cells[k].x1, cells[k].y0, cells[k].y1);
    });
    alive.assign(panels.size(), 1);
  }

  auto worse = [&](std::size_t l, std::size_t r) {
    const auto& p = panels[l];
    const auto& q = panels[r];
    if (p.error != q.error) return p.error < q.error;
    if (p.y0 != q.y0) return p.y0 > q.y0;
    return p.x0 > q.x0;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
  for (std::size_t i = 0; i < panels.size(); ++i) queue.push(i);
  std::size_t live = panels.size();

  bool converged = false;
  for (;;) {
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      if (!alive[i]) continue;
      value += panels[i].value;
      error += panels[i].error;
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
    if (error <= tol) {
      converged = true;
      break;
    }
    if (live + 3 > static_cast<std::size_t>(cfg.max_panels)) break;

    std::vector<std::size_t> batch;
    double remaining = error;
    while (!queue.empty() && batch.size() < kBatch &&
           live + 3 * (batch.size() + 1) <= static_cast<std::size_t>(cfg.max_panels)) {
      if (!batch.empty() && remaining <= tol) break;
      const std::size_t top = queue.top();
      queue.pop();
      remaining -= panels[top].error;
      batch.push_back(top);
    }

    std::vector<detail::Panel> children(4 * batch.size());
    parallel_for(children.size(), threads, [&](std::size_t k) {
      const detail::Panel& p = panels[batch[k / 4]];
      const double xm = 0.5 * (p.x0 + p.x1);
      const double ym = 0.5 * (p.y0 + p.y1);
      switch (k % 4) {
        case 0: children[k] = evaluate(p.x0, xm, p.y0, ym); break;
        case 1: children[k] = evaluate(xm, p.x1, p.y0, ym); break;
        case 2: children[k] = evaluate(p.x0, xm, ym, p.y1); break;
        default: children[k] = evaluate(xm, p.x1, ym, p.y1); break;
      }
    });
    for (std::size_t idx : batch) alive[idx] = 0;
    for (const auto& child : children) {
      panels.push_back(child);
      alive.push_back(1);
      queue.push(panels.size() - 1);
    }
    live += 3 * batch.size();
  }

  std::vector<const detail::Panel*> leaves;
  leaves.reserve(live);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    if (alive[i]) leaves.push_back(&panels[i]);
  }
  std::sort(leaves.begin(), leaves.end(), [](const detail::Panel* p, const detail::Panel* q) {
    if (p->y0 != q->y0) return p->y0 < q->y0;
    return p->x0 < q->x0;
  });
  QuadResult result;
  for (const detail::Panel* p : leaves) {
    result.value += p->value;
    result.error += p->error;
  }
  result.panels = static_cast<int>(leaves.size());
  result.converged = converged;
  return result;
}

/// Split hints for integrands built from `exprs`: domain midlines whenever any
/// of them is non-smooth, plus the caller's `extra` hints.
inline SplitHints split_hints(std::initializer_list<const Expression*> exprs, const RectDomain& dom,
                              const SplitHints& extra = {}) {
  SplitHints h = extra;
  for (const Expression* e : exprs) {
    if (!e->smooth()) {
      h.x.push_back(dom.mid_x());
      h.y.push_back(dom.mid_y());
      break;
    }
  }
  return h;
}

inline QuadResult integrate(const Expression& e, const RectDomain& dom, const QuadConfig& cfg,
                            const SplitHints& extra = {}) {
  return integrate_function([&e](double x, double y) { return e(x, y); }, dom, cfg, split_hints({&e}, dom, extra));
}

/// Integral of e^2 over the domain.
inline QuadResult l2_norm_sq(const Expression& e, const RectDomain& dom, const QuadConfig& cfg,
                             const SplitHints& extra = {}) {
  return integrate_function(
      [&e](double x, double y) {
        const double v = e(x, y);
        return v * v;
      },
      dom, cfg, split_hints({&e}, dom, extra));
}

// ---------------------------------------------------------------------------
// Sampling helpers

/// Inner estimates of inf/sup of a function: gamma_est >= true inf and
/// Gamma_est <= true sup, since both are attained sample values.
struct RangeEstimate {
  double gamma_est = 0.0;
  double Gamma_est = 0.0;
  int grid = 0;
  double spread() const noexcept { return Gamma_est - gamma_est; }
};

/// Min/max over a grid x grid lattice, each extreme polished by coordinate-wise
/// golden-section search (30 steps per axis) inside its surrounding cell.
inline RangeEstimate range_bounds(const Expression& e, const RectDomain& dom, int grid = 201) {
  if (grid < 2) throw PreconditionError("range grid must be >= 2");
  constexpr int kGoldenSteps = 30;
  const double hx = dom.width() / (grid - 1);
  const double hy = dom.height() / (grid - 1);
  auto xi = [&](int i) { return i == grid - 1 ? dom.b() : dom.a() + hx * i; };
  auto yj = [&](int j) { return j == grid - 1 ? dom.d() : dom.c() + hy * j; };

  double lo = 0.0, hi = 0.0;
  int lo_i = 0, lo_j = 0, hi_i = 0, hi_j = 0;
  bool first = true;
  for (int j = 0; j < grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      const double v = e(xi(i), yj(j));
      if (first || v < lo) {
        lo = v;
        lo_i = i;
        lo_j = j;
      }
      if (first || v > hi) {
        hi = v;
        hi_i = i;
        hi_j = j;
      }
      first = false;
    }
  }

  auto polish = [&](int i, int j, double sign, double start) {
    double x = xi(i);
    double y = yj(j);
    double best = start;
    const double xl = std::max(dom.a(), x - hx), xr = std::min(dom.b(), x + hx);
    const double yl = std::max(dom.c(), y - hy), yr = std::min(dom.d(), y + hy);
    auto along_x = golden_section_minimize([&](double t) { return sign * e(t, y); }, xl, xr, kGoldenSteps);
    if (along_x.value < best) {
      best = along_x.value;
      x = along_x.argmin;
    }
    auto along_y = golden_section_minimize([&](double t) { return sign * e(x, t); }, yl, yr, kGoldenSteps);
    if (along_y.value < best) best = along_y.value;
    return sign * best;
  };

  RangeEstimate r;
  r.gamma_est = polish(lo_i, lo_j, 1.0, lo);
  r.Gamma_est = polish(hi_i, hi_j, -1.0, -hi);
  r.grid = grid;
  return r;
}

enum class Edge { XA, XB, YC, YD };

inline constexpr std::array<Edge, 4> kAllEdges{Edge::XA, Edge::XB, Edge::YC, Edge::YD};

inline constexpr std::string_view edge_name(Edge e) noexcept {
  switch (e) {
    case Edge::XA: return "x=a";
    case Edge::XB: return "x=b";
    case Edge::YC: return "y=c";
    default: return "y=d";
  }
}

/// max |e| over `samples` equispaced points (endpoints included) on one edge.
inline double boundary_residual(const Expression& e, const RectDomain& dom, Edge edge, int samples = 257) {
  if (samples < 2) throw PreconditionError("boundary samples must be >= 2");
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    double x = 0.0, y = 0.0;
    switch (edge) {
      case Edge::XA: x = dom.a(); y = dom.c() + t * dom.height(); break;
      case Edge::XB: x = dom.b(); y = dom.c() + t * dom.height(); break;
      case Edge::YC: y = dom.c(); x = dom.a() + t * dom.width(); break;
      case Edge::YD: y = dom.d(); x = dom.a() + t * dom.width(); break;
    }
    if (k == samples - 1) {
      if (edge == Edge::XA || edge == Edge::XB) y = dom.d();
      else x = dom.b();
    }
    worst = std::max(worst, std::fabs(e(x, y)));
  }
  return worst;
}

}  // namespace ineq2d
