#include <cmath>
#include <string>

#include "loglambert/errors.hpp"
#include "loglambert/loglambert.hpp"
#include "power_series.hpp"

namespace loglambert {

using detail::PowerSeries;

double zero_crossing(const Params& p, WBranch w_branch) {
  const double a = p.log_coeff();
  const double b = p.log_scale();
  const double arg = -b * p.shift() * std::exp(1.0 / a) / a;
  if (arg < -1.0 / std::exp(1.0)) {
    throw DomainError("zero_crossing: W argument -BCe^{1/A}/A = " + std::to_string(arg) +
                      " is below -1/e, f has no real zero");
  }
  return std::exp(lambert_w(w_branch, arg) - 1.0 / a) / b;
}

TaylorFirstOrder taylor_first_order(const Params& p, WBranch w_branch) {
  const double a = p.log_coeff();
  const double arg = -p.log_scale() * p.shift() * std::exp(1.0 / a) / a;
  const double a0 = zero_crossing(p, w_branch);
  const double w = lambert_w(w_branch, arg);
  if (std::abs(w + 1.0) < 1e-12) {
    throw SingularityError("taylor_first_order: W(-BCe^{1/A}/A) = -1, f'(a0) vanishes");
  }
  return {a0, std::exp(-a0) / (a * (w + 1.0))};
}

std::vector<double> taylor_coefficients(const Params& p, int n, WBranch w_branch) {
  if (n < 1 || n > 8) throw DomainError("taylor_coefficients: order must be in 1..8");
  const TaylorFirstOrder first = taylor_first_order(p, w_branch);
  const double a0 = first.a0;
  const auto order = static_cast<std::size_t>(n);

  // f(a0 + t) as a truncated series in t.
  PowerSeries shifted(order);
  shifted[0] = a0;
  shifted[1] = 1.0;

  PowerSeries log_part(order);
  log_part[0] = std::log(p.log_scale() * a0);
  double power = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    power /= a0;
    log_part[k] = (k % 2 == 1 ? 1.0 : -1.0) * power / static_cast<double>(k);
  }

  PowerSeries exp_part(order);
  double fact = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    exp_part[k] = std::exp(a0) / fact;
  }

  PowerSeries bracket = shifted * log_part;
  bracket *= p.log_coeff();
  bracket += shifted;
  bracket[0] += p.shift();
  const PowerSeries f = bracket * exp_part;

  if (std::abs(f[1]) < 1e-8) {
    throw PrecisionError("taylor_coefficients: |f'(a0)| < 1e-8, series reversion is ill-conditioned");
  }

  // Lagrange inversion: g_k = (k-1)! [t^{k-1}] (t / f(a0 + t))^k.
  PowerSeries quotient(order - 1);
  for (std::size_t k = 0; k + 1 <= order; ++k) quotient[k] = f[k + 1];
  const PowerSeries phi = quotient.reciprocal();

  std::vector<double> g;
  g.reserve(order);
  double k_minus_1_fact = 1.0;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) k_minus_1_fact *= static_cast<double>(k - 1);
    g.push_back(k_minus_1_fact * phi.pow(k)[static_cast<std::size_t>(k - 1)]);
  }
  return g;
}

double taylor_sum(double a0, const std::vector<double>& g, double x) {
  double sum = a0;
  double term = 1.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    term *= x / static_cast<double>(k + 1);
    sum += g[k] * term;
  }
  return sum;
}

}  // namespace loglambert
