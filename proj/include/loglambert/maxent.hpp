#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "loglambert/loglambert.hpp"
#include "loglambert/qcalculus.hpp"

namespace loglambert {

/// Canonical-ensemble input: energy levels, the multipliers alpha
/// (normalization) and beta (mean energy), and the entropy deformation.
struct EnsembleSpec {
  std::vector<double> levels;
  double alpha = 0.0;
  double beta = 0.0;
  EntropyParams ep;
};

struct DiscreteDistribution {
  std::vector<double> probs;
  /// Unnormalized stationary weights; probs = weights / partition.
  std::vector<double> weights;
  /// Per-level W_LT argument and its solution on the chosen branch.
  std::vector<double> x_values;
  std::vector<double> y_values;
  double partition = 0.0;
  double beta_r = 0.0;
};

/// Stationary solution for one energy level.
struct LevelSolution {
  double x;
  double y;
  /// exp(((1-q')/(1-q)) (w^{q-1} - 1)), equal to B y.
  double u;
  double weight;
};

/// W_LT argument for energy eps:
///   x = (-1/(1-r) + alpha + beta eps) K e^{K},  K = (1-r)/(1-q').
double level_argument(const EntropyParams& ep, double alpha, double beta, double energy);
double level_argument(const EnsembleSpec& spec, std::size_t i);

/// Same argument through the r-exponential:
///   x = e^{K} (1 - alpha(1-r)) [exp_r(-beta_r eps)]^{1-r} / (q'-1).
double level_argument_factored(const EnsembleSpec& spec, std::size_t i);

/// beta_r = beta / (1 - alpha (1-r)).
double pseudo_inverse_temperature(const EnsembleSpec& spec);

/// Solves the stationarity condition for one level on `branch`.
/// DomainError if x leaves the branch or the weight brace is not positive.
LevelSolution solve_level(const EntropyParams& ep, double alpha, double beta, double energy, BranchId branch);

/// { A ln(B W_LT(x_i)) + 1 }^{1/(q-1)} with the induced (A, B).
double weight(const EnsembleSpec& spec, std::size_t i, BranchId branch);

/// weight_i / Z with Z the sum of all level weights.
double probability(const EnsembleSpec& spec, std::size_t i, BranchId branch);

/// Full distribution. Per-level failures are rethrown as DomainError naming
/// the offending level index.
DiscreteDistribution distribution(const EnsembleSpec& spec, BranchId branch);

/// Branch whose y-range contains the stationary y of the uniform
/// distribution over the levels.
BranchId default_branch(const EnsembleSpec& spec);

/// alpha for which the stationary weights sum to one (Z = 1), found by
/// safeguarded secant iteration from the uniform-distribution estimate.
double normalizing_alpha(const EnsembleSpec& spec, BranchId branch);

/// d/dp [p ln_{q,q',r}(1/p)] in closed form.
double entropy_term_slope(const EntropyParams& ep, double p);

/// Per-level (1/k) dS/dp_i + alpha + beta eps_i, with dS/dp_i taken by central
/// finite difference. Zero at a stationary point.
std::vector<double> stationarity_residuals(const EnsembleSpec& spec, std::span<const double> probs);

struct ContinuousPdf {
  std::vector<double> values;
  /// Integral of the unnormalized density over the real line.
  double normalization = 0.0;
};

/// Density p(x) with energy x^2 on the grid, normalized by adaptive Simpson
/// over [-L, L]. Where the weight brace turns non-positive and 1/(q-1) > 0 the
/// density is cut off to zero. IntegrationError when the grid ends exceed
/// 1e-10 of the peak.
ContinuousPdf continuous_pdf(const EntropyParams& ep, double alpha, double beta, BranchId branch,
                             std::span<const double> x_grid);

}  // namespace loglambert
