#pragma once

#include <cmath>
#include <utility>

namespace ineq2d {

struct LineSearchResult {
  double argmin;
  double value;
};

/// Golden-section search for a minimum of `f` on [lo, hi], `iterations`
/// bracket reductions. Returns the best point actually evaluated, so the
/// reported value is always attained by `f`.
template <class F>
LineSearchResult golden_section_minimize(F&& f, double lo, double hi, int iterations) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  LineSearchResult best = fc <= fd ? LineSearchResult{c, fc} : LineSearchResult{d, fd};
  for (int i = 0; i < iterations; ++i) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
      if (fc < best.value) best = {c, fc};
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

}  // namespace ineq2d
