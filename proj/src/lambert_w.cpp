#include "loglambert/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "loglambert/errors.hpp"

namespace loglambert {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// e split as hi + lo so that e*x + 1 keeps its low bits near the branch point.
constexpr double kEHi = 2.718281828459045;
constexpr double kELo = 1.4456468917292502e-16;

double branch_point_distance(double x) {
  return std::fma(x, kEHi, 1.0) + x * kELo;
}

// W = -1 + p - p^2/3 + 11/72 p^3 - ... with p = +-sqrt(2(e x + 1)).
double branch_point_series(double p) {
  static constexpr double kCoeff[] = {
      -1.0,
      1.0,
      -1.0 / 3.0,
      11.0 / 72.0,
      -43.0 / 540.0,
      769.0 / 17280.0,
      -221.0 / 8505.0,
      680863.0 / 43545600.0,
      -1963.0 / 204120.0,
      226287557.0 / 37623398400.0,
  };
  double sum = 0.0;
  for (int k = std::size(kCoeff) - 1; k >= 0; --k) sum = sum * p + kCoeff[k];
  return sum;
}

double asymptotic_seed(double l1) {
  const double l2 = std::log(std::abs(l1));
  return l1 - l2 + l2 / l1;
}

double halley(double w, double x) {
  double best = w;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double residual = std::abs(f);
    if (residual < best_residual) {
      best = w;
      best_residual = residual;
    } else if (iter > 1) {
      break;
    }
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) {
      const double r = std::abs(w * std::exp(w) - x);
      if (r < best_residual) best = w;
      break;
    }
  }
  return best;
}

}  // namespace

double lambert_w(WBranch branch, double x) {
  if (std::isnan(x)) throw DomainError("lambert_w: argument is NaN");

  const double dist = branch_point_distance(x);
  if (dist < -4.0 * kEps) {
    throw DomainError("lambert_w: argument " + std::to_string(x) + " is below -1/e");
  }
  const double p_abs = std::sqrt(2.0 * std::max(dist, 0.0));

  if (branch == WBranch::Principal) {
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    if (p_abs == 0.0) return -1.0;
    double seed;
    if (x < -0.25) {
      seed = branch_point_series(p_abs);
    } else if (x < 3.0) {
      const double l = std::log1p(x);
      seed = l * (1.0 - std::log1p(l) / (2.0 + l));
    } else {
      seed = asymptotic_seed(std::log(x));
    }
    return halley(seed, x);
  }

  if (x >= 0.0) {
    throw DomainError("lambert_w: W-1 requires -1/e <= x < 0, got " + std::to_string(x));
  }
  if (p_abs == 0.0) return -1.0;
  const double seed = x < -0.25 ? branch_point_series(-p_abs) : asymptotic_seed(std::log(-x));
  return halley(seed, x);
}

}  // namespace loglambert
