#pragma once

#include <compare>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "loglambert/lambert_w.hpp"

namespace loglambert {

/// Coefficients of f(y) = (A y ln(B y) + y + C) e^y.
///
/// A multiplies y ln(By), B scales the logarithm argument and fixes the sign
/// of admissible y (B y > 0), C is the additive translation. A = 0 and B = 0
/// are rejected on construction.
class Params {
 public:
  Params(double log_coeff, double log_scale, double shift);

  double log_coeff() const { return a_; }
  double log_scale() const { return b_; }
  double shift() const { return c_; }

  /// +1 when admissible y are positive, -1 when negative.
  double y_sign() const { return b_ > 0.0 ? 1.0 : -1.0; }

  bool operator==(const Params&) const = default;

  std::string to_string() const;

 private:
  double a_;
  double b_;
  double c_;
};

/// Index of a real monotone branch: 0, 1 (B > 0) or 0, 1, 2 (B < 0).
struct BranchId {
  int index = 0;
  auto operator<=>(const BranchId&) const = default;
};

enum class Monotone { Increasing, Decreasing };

/// Real interval with independently open or closed ends; ends may be +-inf.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(double v) const {
    return (lo_closed ? v >= lo : v > lo) && (hi_closed ? v <= hi : v < hi);
  }
  std::string to_string() const;
};

/// Singular point delta (root of f') together with the seam value f(delta).
struct SingularPoint {
  double y;
  double x;
};

struct BranchInfo {
  BranchId id;
  Interval x_domain;
  Interval y_range;
  Monotone monotone;
  std::vector<SingularPoint> singular_points;
};

struct EvalResult {
  double y = 0.0;
  double residual = 0.0;
  int iterations = 0;
  /// x sat exactly on a seam value f(delta); y is the singular point itself.
  bool on_seam = false;
};

inline constexpr double kDefaultTolerance = 1e-12;

/// f(y) = (A y ln(By) + y + C) e^y. DomainError unless B y > 0.
double forward(const Params& p, double y);

/// A (y+1) ln(By) + y + A + C + 1, so that f'(y) = slope_factor * e^y.
double slope_factor(const Params& p, double y);

/// Roots of slope_factor on the admissible half-line, ascending.
///
/// One root is expected for B > 0 and two for B < 0; any other count raises
/// NoSolutionError.
std::vector<double> singular_points(const Params& p);

/// Full branch catalog. Throws UnsupportedCaseError outside the four sign
/// cases (B < 0 requires |C| <= A when A > 0 and C <= |A| when A < 0).
/// Results are memoized per parameter triple.
const std::vector<BranchInfo>& branches(const Params& p);

/// Catalog entry for one branch; DomainError for an unknown index.
const BranchInfo& branch_info(const Params& p, BranchId branch);

/// The inverse y = W_LT(x) on one branch.
///
/// Bracketed Newton iteration with bisection fallback, bracket taken from
/// the branch ends and grown geometrically toward unbounded or open ends.
/// Throws DomainError when x is outside the branch domain.
EvalResult eval(const Params& p, BranchId branch, double x, double tol = kDefaultTolerance);

/// dW_LT/dx at x = f(y), i.e. e^{-y} / slope_factor(y).
/// SingularityError on a vertical tangent, DomainError unless B y > 0.
double derivative(const Params& p, double y);

/// Antiderivative of W_LT expressed in y = W_LT(x):
///   F(y) = e^y [ (y^2 - y + 1) A ln(By) + y^2 + (C-1) y + 1 + A - C ] - A Ei(y).
double antiderivative(const Params& p, double y);

/// Large-x approximation built on the classical W evaluated at
/// xi = x e^{C/(A+1)} / (A+1).
double asymptotic(const Params& p, double x);

/// Expansion point a0 = W_LT(0) and first coefficient a1 = dW_LT/dx at 0.
struct TaylorFirstOrder {
  double a0;
  double a1;
};

/// Closed-form a0 = e^{W(-BCe^{1/A}/A) - 1/A} / B and
/// a1 = e^{-a0} / (A (W + 1)). `w_branch` selects which real zero of f is
/// used when the W argument lies in [-1/e, 0).
TaylorFirstOrder taylor_first_order(const Params& p, WBranch w_branch = WBranch::Principal);

/// Lagrange-inversion coefficients g_1..g_n (1 <= n <= 8) so that
///   W_LT(x) = a0 + sum g_k x^k / k!
/// obtained by reverting the Taylor series of f about a0.
std::vector<double> taylor_coefficients(const Params& p, int n,
                                        WBranch w_branch = WBranch::Principal);

/// Evaluates a0 + sum_k g_k x^k / k!.
double taylor_sum(double a0, const std::vector<double>& g, double x);

/// The y where f crosses zero, e^{W(-BCe^{1/A}/A) - 1/A} / B.
double zero_crossing(const Params& p, WBranch w_branch = WBranch::Principal);

}  // namespace loglambert
