#pragma once

#include <cmath>
#include <functional>

#include "loglambert/errors.hpp"

namespace loglambert {

namespace detail {

inline double simpson_step(const std::function<double(double)>& fn, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm);
  const double frm = fn(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw IntegrationError("adaptive_simpson: recursion depth exhausted");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(fn, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(fn, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of fn over [a, b] to absolute tolerance tol,
/// with Richardson correction on accepted panels.
inline double adaptive_simpson(const std::function<double(double)>& fn, double a, double b, double tol,
                               int max_depth = 48) {
  const double fa = fn(a);
  const double fb = fn(b);
  const double fm = fn(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(fn, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace loglambert
