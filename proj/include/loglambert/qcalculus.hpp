#pragma once

#include <span>

#include "loglambert/loglambert.hpp"

namespace loglambert {

/// Deformations closer than this to 1 switch to their undeformed limit.
inline constexpr double kDeformationLimit = 1e-12;

/// Deformation parameters (q, q', r) of the three-parameter entropy and the
/// positive constant k.
struct EntropyParams {
  double q = 1.0;
  double q_prime = 1.0;
  double r = 1.0;
  double k = 1.0;

  /// Coefficients of the W_LT equation generated by maximizing the entropy:
  /// A = (1-q)/(1-q'), B = (1-q')/(1-r), C = -1/(1-q').
  /// DomainError when q, q' or r equals 1.
  Params induced_params() const;
};

/// (x^{1-q} - 1)/(1-q); ln x in the q -> 1 limit.
double ln_q(double q, double x);

/// [1 + (1-q) x]^{1/(1-q)}; exp x in the q -> 1 limit.
double exp_q(double q, double x);

/// Two-parameter logarithm (e^{(1-q') ln_q x} - 1)/(1-q').
double ln_qq(double q, double q_prime, double x);

/// Three-parameter logarithm
///   (1/(1-r)) [ exp( ((1-r)/(1-q')) (e^{(1-q') ln_q x} - 1) ) - 1 ],
/// i.e. (e^{(1-r) ln_{q,q'} x} - 1)/(1-r). Zero at x = 1 for every deformation.
double ln_qqr(const EntropyParams& ep, double x);

/// k sum p_i ln_{q,q',r}(1/p_i); zero entries contribute nothing.
double entropy_qqr(const EntropyParams& ep, std::span<const double> probs);

/// k sum p_i ln_{q,q'}(1/p_i).
double entropy_qq(double q, double q_prime, std::span<const double> probs, double k = 1.0);

}  // namespace loglambert
