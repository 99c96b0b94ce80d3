#pragma once

// One-dimensional search primitives: golden-section refinement of a bracketed
// minimum and bisection of a monotone predicate.

#include <cmath>
#include <utility>

namespace subord {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than
/// `resolution`. Returns the best point seen, endpoints included.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double resolution) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  ScalarMinimum best{lo, f(lo)};
  const double fhi = f(hi);
  if (fhi < best.value) best = {hi, fhi};
  while (b - a > resolution) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

/// Bisection of a predicate that fails at `lo` and holds at `hi`, assumed to
/// switch once on the bracket. Returns the upper end of the final bracket,
/// a point where the predicate holds.
template <class P>
double bisect_threshold(P&& holds, double lo, double hi, double resolution) {
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace subord
