#pragma once

namespace loglambert {

/// Real branch of the classical Lambert W function.
///   Principal: W0 on [-1/e, inf), values >= -1.
///   Negative:  W-1 on [-1/e, 0), values <= -1.
enum class WBranch { Principal, Negative };

/// Solves w * exp(w) = x on the requested real branch.
///
/// Halley iteration seeded by the branch-point series in sqrt(2(e x + 1)) near
/// -1/e, by log(1+x) for moderate x and by the L1 - L2 + L2/L1 asymptote for
/// large |log|x||. Throws DomainError outside the branch domain.
double lambert_w(WBranch branch, double x);

inline double lambert_w0(double x) { return lambert_w(WBranch::Principal, x); }
inline double lambert_wm1(double x) { return lambert_w(WBranch::Negative, x); }

}  // namespace loglambert
