#include "loglambert/qcalculus.hpp"

#include <cmath>
#include <string>

#include "loglambert/errors.hpp"

namespace loglambert {
namespace {

bool undeformed(double q) { return std::abs(1.0 - q) < kDeformationLimit; }

// (e^{d z} - 1)/d, continuous through d = 0.
double deform(double d, double z) {
  if (std::abs(d) < kDeformationLimit) return z;
  return std::expm1(d * z) / d;
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw OverflowError(std::string(what) + ": result overflows");
  return v;
}

void check_normalized(std::span<const double> probs, const char* what) {
  if (probs.empty()) throw DomainError(std::string(what) + ": empty probability vector");
  double sum = 0.0;
  for (double v : probs) {
    if (!(v >= 0.0) || v > 1.0) throw DomainError(std::string(what) + ": probabilities must lie in [0, 1]");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError(std::string(what) + ": probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

}  // namespace

Params EntropyParams::induced_params() const {
  if (undeformed(q) || undeformed(q_prime) || undeformed(r)) {
    throw DomainError("induced_params: q, q' and r must all differ from 1");
  }
  return Params((1.0 - q) / (1.0 - q_prime), (1.0 - q_prime) / (1.0 - r), -1.0 / (1.0 - q_prime));
}

double ln_q(double q, double x) {
  if (!(x > 0.0)) throw DomainError("ln_q: x must be positive");
  return deform(1.0 - q, std::log(x));
}

double exp_q(double q, double x) {
  if (undeformed(q)) return checked(std::exp(x), "exp_q");
  const double d = 1.0 - q;
  const double base = 1.0 + d * x;
  if (!(base > 0.0)) throw DomainError("exp_q: 1 + (1-q) x must be positive");
  return checked(std::exp(std::log1p(d * x) / d), "exp_q");
}

double ln_qq(double q, double q_prime, double x) {
  return checked(deform(1.0 - q_prime, ln_q(q, x)), "ln_qq");
}

double ln_qqr(const EntropyParams& ep, double x) {
  return checked(deform(1.0 - ep.r, ln_qq(ep.q, ep.q_prime, x)), "ln_qqr");
}

double entropy_qqr(const EntropyParams& ep, std::span<const double> probs) {
  if (!(ep.k > 0.0)) throw DomainError("entropy_qqr: k must be positive");
  check_normalized(probs, "entropy_qqr");
  double s = 0.0;
  for (double p : probs) {
    if (p > 0.0) s += p * ln_qqr(ep, 1.0 / p);
  }
  return ep.k * s;
}

double entropy_qq(double q, double q_prime, std::span<const double> probs, double k) {
  if (!(k > 0.0)) throw DomainError("entropy_qq: k must be positive");
  check_normalized(probs, "entropy_qq");
  double s = 0.0;
  for (double p : probs) {
    if (p > 0.0) s += p * ln_qq(q, q_prime, 1.0 / p);
  }
  return k * s;
}

}  // namespace loglambert
