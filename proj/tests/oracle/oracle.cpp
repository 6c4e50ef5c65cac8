#include "oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

#include "loglambert/errors.hpp"

namespace oracle {

double forward_ref(const loglambert::Params& p, double y) {
  const double by = p.log_scale() * y;
  if (!(by > 0.0)) throw loglambert::DomainError("forward_ref: B*y <= 0");
  return std::exp(y) * (p.log_coeff() * y * std::log(by) + y + p.shift());
}

double bisect_root(const std::function<double(double)>& fn, double lo, double hi) {
  double flo = fn(lo);
  const double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw loglambert::BracketError("bisect_root: no sign change");
  for (int i = 0; i < 4000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::abs(fn(lo)) < std::abs(fn(hi)) ? lo : hi;
}

double bisect_invert(const loglambert::Params& p, double y_lo, double y_hi, double x) {
  const double g_lo = forward_ref(p, y_lo) - x;
  const double g_hi = forward_ref(p, y_hi) - x;
  if ((g_lo > 0.0 && g_hi > 0.0) || (g_lo < 0.0 && g_hi < 0.0)) {
    throw loglambert::BracketError("bisect_invert: forward(y_lo) and forward(y_hi) do not straddle x");
  }
  return bisect_root([&](double y) { return forward_ref(p, y) - x; }, y_lo, y_hi);
}

double integrate(const std::function<double(double)>& fn, double a, double b, double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0;
  return gauss_kronrod<double, 61>::integrate(fn, a, b, 25, rel_tol, &error);
}

double quad_ei(double x) {
  if (x == 0.0) throw loglambert::DomainError("quad_ei: singular at 0");
  constexpr double gamma = 0.577215664901532860606512090082402431;
  auto smooth = [](double t) { return t == 0.0 ? 1.0 : std::expm1(t) / t; };
  const double lo = std::min(0.0, x);
  const double hi = std::max(0.0, x);
  double integral = 0.0;
  // Panels of unit width keep the exponential integrand well resolved.
  for (double a = lo; a < hi; a += 1.0) integral += integrate(smooth, a, std::min(a + 1.0, hi), 1e-13);
  if (x < 0.0) integral = -integral;
  return gamma + std::log(std::abs(x)) + integral;
}

double central_difference(const std::function<double(double)>& fn, double x, double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

double fd_derivative(const loglambert::Params& p, loglambert::BranchId branch, double x, double h) {
  return central_difference([&](double t) { return loglambert::eval(p, branch, t).y; }, x, h);
}

}  // namespace oracle
