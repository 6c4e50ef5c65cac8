#include "loglambert/exp_integral.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "loglambert/errors.hpp"

namespace loglambert {
namespace detail {

double ei_series(double x) {
  // Negative arguments alternate; the extended mantissa absorbs the
  // cancellation up to |x| ~ 6 (loss ~ e^{2|x|}).
  const long double xl = x;
  const long double eps = std::numeric_limits<long double>::epsilon();
  long double term = 1.0L;
  long double sum = 0.0L;
  for (int n = 1; n < 1000; ++n) {
    term *= xl / n;
    const long double contrib = term / n;
    sum += contrib;
    if (n > std::abs(x) && std::abs(contrib) < eps * std::abs(sum)) break;
  }
  return static_cast<double>(static_cast<long double>(kEulerGamma) + std::log(std::abs(xl)) + sum);
}

double ei_continued_fraction(double x) {
  const double z = -x;
  constexpr double tiny = 1e-300;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double b = z + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return -h * std::exp(-z);
}

double ei_asymptotic(double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < std::numeric_limits<double>::epsilon() * sum) break;
  }
  return std::exp(x - std::log(x)) * sum;
}

}  // namespace detail

double ei(double x) {
  if (std::isnan(x)) throw DomainError("ei: argument is NaN");
  if (x == 0.0) throw DomainError("ei: logarithmic singularity at x = 0");
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;

  double value;
  if (x < 0.0) {
    value = x >= -6.0 ? detail::ei_series(x) : detail::ei_continued_fraction(x);
  } else if (x <= 40.0) {
    value = detail::ei_series(x);
  } else {
    value = detail::ei_asymptotic(x);
  }
  if (!std::isfinite(value)) {
    throw OverflowError("ei: result overflows for x = " + std::to_string(x));
  }
  return value;
}

}  // namespace loglambert
