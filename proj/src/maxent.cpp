#include "loglambert/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loglambert/errors.hpp"
#include "loglambert/quadrature.hpp"

namespace loglambert {
namespace {

double coupling(const EntropyParams& ep) { return (1.0 - ep.r) / (1.0 - ep.q_prime); }

void check_level(const EnsembleSpec& spec, std::size_t i) {
  if (i >= spec.levels.size()) throw DomainError("level index " + std::to_string(i) + " out of range");
}

struct Brace {
  double x, y, value;
};

Brace weight_brace(const EntropyParams& ep, double alpha, double beta, double energy, BranchId branch) {
  const Params params = ep.induced_params();
  const double x = level_argument(ep, alpha, beta, energy);
  const double y = eval(params, branch, x).y;
  const double z = params.log_scale() * y;
  if (!(z > 0.0)) throw DomainError("weight: logarithm argument B*W_LT(x) is not positive");
  return {x, y, params.log_coeff() * std::log(z) + 1.0};
}

}  // namespace

double level_argument(const EntropyParams& ep, double alpha, double beta, double energy) {
  if (std::abs(1.0 - ep.r) < kDeformationLimit || std::abs(1.0 - ep.q_prime) < kDeformationLimit) {
    throw DomainError("level_argument: q' and r must differ from 1");
  }
  const double k = coupling(ep);
  return (-1.0 / (1.0 - ep.r) + alpha + beta * energy) * k * std::exp(k);
}

double level_argument(const EnsembleSpec& spec, std::size_t i) {
  check_level(spec, i);
  return level_argument(spec.ep, spec.alpha, spec.beta, spec.levels[i]);
}

double pseudo_inverse_temperature(const EnsembleSpec& spec) {
  const double denom = 1.0 - spec.alpha * (1.0 - spec.ep.r);
  if (denom == 0.0) throw SingularityError("pseudo_inverse_temperature: 1 - alpha(1-r) vanishes");
  return spec.beta / denom;
}

double level_argument_factored(const EnsembleSpec& spec, std::size_t i) {
  check_level(spec, i);
  const EntropyParams& ep = spec.ep;
  const double beta_r = pseudo_inverse_temperature(spec);
  const double r_exp = exp_q(ep.r, -beta_r * spec.levels[i]);
  return std::exp(coupling(ep)) * (1.0 - spec.alpha * (1.0 - ep.r)) * std::pow(r_exp, 1.0 - ep.r) /
         (ep.q_prime - 1.0);
}

LevelSolution solve_level(const EntropyParams& ep, double alpha, double beta, double energy, BranchId branch) {
  const Brace b = weight_brace(ep, alpha, beta, energy, branch);
  if (!(b.value > 0.0)) {
    throw DomainError("weight: brace A ln(B W_LT(x)) + 1 = " + std::to_string(b.value) + " is not positive");
  }
  const double w = std::pow(b.value, 1.0 / (ep.q - 1.0));
  if (!std::isfinite(w)) throw OverflowError("weight: result overflows");
  const Params params = ep.induced_params();
  return {b.x, b.y, params.log_scale() * b.y, w};
}

double weight(const EnsembleSpec& spec, std::size_t i, BranchId branch) {
  check_level(spec, i);
  return solve_level(spec.ep, spec.alpha, spec.beta, spec.levels[i], branch).weight;
}

DiscreteDistribution distribution(const EnsembleSpec& spec, BranchId branch) {
  if (spec.levels.empty()) throw DomainError("distribution: no energy levels");
  DiscreteDistribution out;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    if (!std::isfinite(spec.levels[i])) throw DomainError("level " + std::to_string(i) + ": energy is not finite");
    try {
      const LevelSolution s = solve_level(spec.ep, spec.alpha, spec.beta, spec.levels[i], branch);
      out.x_values.push_back(s.x);
      out.y_values.push_back(s.y);
      out.weights.push_back(s.weight);
    } catch (const Error& e) {
      throw DomainError("level " + std::to_string(i) + " (energy " + std::to_string(spec.levels[i]) +
                        "): " + e.what());
    }
  }
  for (double w : out.weights) out.partition += w;
  for (double w : out.weights) out.probs.push_back(w / out.partition);
  out.beta_r = pseudo_inverse_temperature(spec);
  return out;
}

double probability(const EnsembleSpec& spec, std::size_t i, BranchId branch) {
  check_level(spec, i);
  const DiscreteDistribution d = distribution(spec, branch);
  return d.probs[i];
}

BranchId default_branch(const EnsembleSpec& spec) {
  if (spec.levels.empty()) throw DomainError("default_branch: no energy levels");
  const EntropyParams& ep = spec.ep;
  const double omega = static_cast<double>(spec.levels.size());
  const double u = std::exp((1.0 - ep.q_prime) * ln_q(ep.q, omega));
  const double y = coupling(ep) * u;
  const auto& catalog = branches(ep.induced_params());
  for (const BranchInfo& info : catalog) {
    if (info.y_range.contains(y)) return info.id;
  }
  throw DomainError("default_branch: uniform warm start y = " + std::to_string(y) + " lies on no branch");
}

double entropy_term_slope(const EntropyParams& ep, double p) {
  if (!(p > 0.0)) throw DomainError("entropy_term_slope: p must be positive");
  const double u = std::exp((1.0 - ep.q_prime) * ln_q(ep.q, 1.0 / p));
  return ln_qqr(ep, 1.0 / p) - std::pow(p, ep.q - 1.0) * u * std::exp(coupling(ep) * (u - 1.0));
}

double normalizing_alpha(const EnsembleSpec& spec, BranchId branch) {
  if (spec.levels.empty()) throw DomainError("normalizing_alpha: no energy levels");
  const double omega = static_cast<double>(spec.levels.size());
  double mean_energy = 0.0;
  for (double e : spec.levels) mean_energy += e / omega;

  auto excess = [&](double alpha) {
    double total = 0.0;
    for (double e : spec.levels) total += solve_level(spec.ep, alpha, spec.beta, e, branch).weight;
    return total - 1.0;
  };

  // Stationarity at the uniform distribution gives the starting estimate.
  double a0 = -entropy_term_slope(spec.ep, 1.0 / omega) - spec.beta * mean_energy;
  double s0 = excess(a0);
  double a1 = a0 + 1e-3 * std::max(1.0, std::abs(a0));
  double s1;
  for (int tries = 0;; ++tries) {
    try {
      s1 = excess(a1);
      break;
    } catch (const DomainError&) {
      if (tries > 60) throw;
      a1 = a0 - 0.5 * (a1 - a0);
    }
  }

  for (int iter = 0; iter < 200; ++iter) {
    if (s1 == 0.0) return a1;
    if (s1 == s0) break;
    double step = -s1 * (a1 - a0) / (s1 - s0);
    double next = a1 + step;
    double s_next = 0.0;
    bool ok = false;
    for (int tries = 0; tries < 60; ++tries) {
      try {
        s_next = excess(next);
        ok = true;
        break;
      } catch (const DomainError&) {
        step *= 0.5;
        next = a1 + step;
      }
    }
    if (!ok) throw ConvergenceError("normalizing_alpha: no admissible secant step");
    a0 = a1;
    s0 = s1;
    a1 = next;
    s1 = s_next;
    if (std::abs(s1) <= 1e-15 * omega || std::abs(a1 - a0) <= 1e-16 * std::max(1.0, std::abs(a1))) return a1;
  }
  if (std::abs(s1) <= 1e-12) return a1;
  throw ConvergenceError("normalizing_alpha: secant iteration did not converge");
}

std::vector<double> stationarity_residuals(const EnsembleSpec& spec, std::span<const double> probs) {
  if (probs.size() != spec.levels.size()) {
    throw DomainError("stationarity_residuals: probability and level counts differ");
  }
  auto term = [&](double p) { return p * ln_qqr(spec.ep, 1.0 / p); };
  std::vector<double> out;
  out.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    const double h = 1e-5 * p;
    const double slope = (term(p + h) - term(p - h)) / (2.0 * h);
    out.push_back(slope + spec.alpha + spec.beta * spec.levels[i]);
  }
  return out;
}

ContinuousPdf continuous_pdf(const EntropyParams& ep, double alpha, double beta, BranchId branch,
                             std::span<const double> x_grid) {
  if (x_grid.empty()) throw DomainError("continuous_pdf: empty grid");
  const double exponent = 1.0 / (ep.q - 1.0);

  auto density = [&](double x) {
    const Brace b = weight_brace(ep, alpha, beta, x * x, branch);
    if (b.value > 0.0) return std::pow(b.value, exponent);
    if (exponent > 0.0) return 0.0;
    throw DomainError("continuous_pdf: weight brace is not positive at x = " + std::to_string(x));
  };

  ContinuousPdf out;
  out.values.reserve(x_grid.size());
  double peak = 0.0;
  for (double x : x_grid) {
    out.values.push_back(density(x));
    peak = std::max(peak, out.values.back());
  }
  if (!(peak > 0.0)) throw IntegrationError("continuous_pdf: density vanishes on the whole grid");

  const auto [lo_it, hi_it] = std::minmax_element(x_grid.begin(), x_grid.end());
  const double half_width = std::max(std::abs(*lo_it), std::abs(*hi_it));
  if (density(half_width) > 1e-10 * peak) {
    throw IntegrationError("continuous_pdf: density at |x| = " + std::to_string(half_width) +
                           " exceeds 1e-10 of its peak; widen the grid");
  }
  // Even integrand: integrate the right half.
  const std::function<double(double)> fn = density;
  const double half = adaptive_simpson(fn, 0.0, half_width, 1e-14 * peak * half_width);
  out.normalization = 2.0 * half;
  for (double& v : out.values) v /= out.normalization;
  return out;
}

}  // namespace loglambert
