#pragma once

namespace loglambert {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Exponential integral Ei(x), Cauchy principal value of the integral of
/// e^t / t from -inf to x. Throws DomainError at x = 0 and OverflowError
/// once the result leaves the double range (x above roughly 716).
double ei(double x);

namespace detail {
// Individual evaluation regimes, exposed for crossover tests.

/// gamma + ln|x| + sum x^n / (n n!), accumulated in long double.
double ei_series(double x);
/// -E1(-x) by modified Lentz continued fraction; x < 0.
double ei_continued_fraction(double x);
/// e^x / x * sum n! / x^n truncated at the smallest term; large x > 0.
double ei_asymptotic(double x);
}  // namespace detail

}  // namespace loglambert
