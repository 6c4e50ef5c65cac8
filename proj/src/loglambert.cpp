#include "loglambert/loglambert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <tuple>

#include "loglambert/errors.hpp"
#include "loglambert/exp_integral.hpp"

namespace loglambert {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_admissible(const Params& p, double y, const char* what) {
  if (!(p.log_scale() * y > 0.0)) {
    throw DomainError(std::string(what) + ": B*y must be positive (B = " + fmt(p.log_scale()) +
                      ", y = " + fmt(y) + ")");
  }
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Bisection of a sign change of `fn` on [a, b] down to adjacent doubles.
template <typename Fn>
double bisect_root(Fn&& fn, double a, double b) {
  double fa = fn(a);
  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sign_of(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return std::abs(fn(a)) <= std::abs(fn(b)) ? a : b;
}

// Limit of f at one end of a branch's y-range.
struct EndLimit {
  double x;
  bool closed;
};

std::vector<BranchInfo> build_catalog(const Params& p) {
  const double a = p.log_coeff();
  const double b = p.log_scale();
  const double c = p.shift();

  if (b < 0.0) {
    const bool covered = a > 0.0 ? std::abs(c) <= a : c <= std::abs(a);
    if (!covered) {
      throw UnsupportedCaseError(
          "branches: B < 0 is covered only for A > 0 with |C| <= A, or A < 0 with C <= |A|; got " +
          p.to_string());
    }
  }

  const std::vector<double> deltas = singular_points(p);

  auto make = [&](int index, double y_lo, bool lo_closed, double y_hi, bool hi_closed,
                  EndLimit at_lo, EndLimit at_hi, double interior) {
    BranchInfo info;
    info.id = BranchId{index};
    info.y_range = Interval{y_lo, y_hi, lo_closed, hi_closed};
    info.monotone = slope_factor(p, interior) > 0.0 ? Monotone::Increasing : Monotone::Decreasing;
    const EndLimit& x_lo = info.monotone == Monotone::Increasing ? at_lo : at_hi;
    const EndLimit& x_hi = info.monotone == Monotone::Increasing ? at_hi : at_lo;
    info.x_domain = Interval{x_lo.x, x_hi.x, x_lo.closed, x_hi.closed};
    for (double d : deltas) {
      if (d == y_lo || d == y_hi) info.singular_points.push_back({d, forward(p, d)});
    }
    return info;
  };

  const EndLimit at_zero{c, false};
  std::vector<BranchInfo> out;
  if (b > 0.0) {
    const double d = deltas.front();
    const EndLimit at_delta{forward(p, d), true};
    const EndLimit at_inf{a > 0.0 ? kInf : -kInf, false};
    out.push_back(make(0, 0.0, false, d, true, at_zero, at_delta, 0.5 * d));
    out.push_back(make(1, d, true, kInf, false, at_delta, at_inf, 2.0 * d + 1.0));
  } else {
    const double d2 = deltas[0];
    const double d1 = deltas[1];
    const EndLimit at_d1{forward(p, d1), true};
    const EndLimit at_d2{forward(p, d2), true};
    const EndLimit at_neg_inf{0.0, false};
    out.push_back(make(0, d1, true, 0.0, false, at_d1, at_zero, 0.5 * d1));
    out.push_back(make(1, d2, true, d1, true, at_d2, at_d1, 0.5 * (d1 + d2)));
    out.push_back(make(2, -kInf, false, d2, true, at_neg_inf, at_d2, 2.0 * d2 - 1.0));
  }
  return out;
}

// Newton iteration safeguarded by a shrinking sign-change bracket [lo, hi].
struct Bracket {
  double lo, hi;
  int sign_lo;
};

double bisect_point(double lo, double hi) {
  if (lo > 0.0 && hi > 0.0 && hi > 2.0 * lo) return std::sqrt(lo) * std::sqrt(hi);
  if (lo < 0.0 && hi < 0.0 && lo < 2.0 * hi) return -std::sqrt(-lo) * std::sqrt(-hi);
  return 0.5 * (lo + hi);
}

}  // namespace

Params::Params(double log_coeff, double log_scale, double shift)
    : a_(log_coeff), b_(log_scale), c_(shift) {
  if (!std::isfinite(a_) || !std::isfinite(b_) || !std::isfinite(c_)) {
    throw DomainError("Params: coefficients must be finite");
  }
  if (a_ == 0.0) throw DomainError("Params: A = 0 is the non-logarithmic case and is not supported");
  if (b_ == 0.0) throw DomainError("Params: B must be nonzero");
}

std::string Params::to_string() const {
  return "(A=" + fmt(a_) + ", B=" + fmt(b_) + ", C=" + fmt(c_) + ")";
}

std::string Interval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + fmt(lo) + ", " + fmt(hi) + (hi_closed ? "]" : ")");
}

double forward(const Params& p, double y) {
  require_admissible(p, y, "forward");
  return (p.log_coeff() * y * std::log(p.log_scale() * y) + y + p.shift()) * std::exp(y);
}

double slope_factor(const Params& p, double y) {
  require_admissible(p, y, "slope_factor");
  const double a = p.log_coeff();
  return a * (y + 1.0) * std::log(p.log_scale() * y) + y + a + p.shift() + 1.0;
}

std::vector<double> singular_points(const Params& p) {
  const double s = p.y_sign();
  auto d = [&](double y) { return slope_factor(p, y); };

  std::vector<double> roots;
  constexpr double kStep = 0.005;
  double prev_y = s * std::pow(10.0, -300.0);
  double prev_d = d(prev_y);
  for (double t = -300.0 + kStep; t <= 20.0; t += kStep) {
    const double y = s * std::pow(10.0, t);
    const double dv = d(y);
    if (dv == 0.0) {
      roots.push_back(y);
    } else if (prev_d != 0.0 && sign_of(dv) != sign_of(prev_d)) {
      roots.push_back(bisect_root(d, prev_y, y));
    }
    prev_y = y;
    prev_d = dv;
  }
  std::sort(roots.begin(), roots.end());

  const std::size_t expected = p.log_scale() > 0.0 ? 1 : 2;
  if (roots.size() != expected) {
    throw NoSolutionError("singular_points: expected " + std::to_string(expected) +
                          " real root(s) of the slope equation for " + p.to_string() + ", found " +
                          std::to_string(roots.size()));
  }
  return roots;
}

const std::vector<BranchInfo>& branches(const Params& p) {
  using Key = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::vector<BranchInfo>> cache;

  const Key key{std::bit_cast<std::uint64_t>(p.log_coeff()),
                std::bit_cast<std::uint64_t>(p.log_scale()),
                std::bit_cast<std::uint64_t>(p.shift())};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto catalog = build_catalog(p);
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(catalog)).first->second;
}

const BranchInfo& branch_info(const Params& p, BranchId branch) {
  const auto& catalog = branches(p);
  if (branch.index < 0 || branch.index >= static_cast<int>(catalog.size())) {
    throw DomainError("branch index " + std::to_string(branch.index) + " does not exist for " +
                      p.to_string() + " (valid: 0.." + std::to_string(catalog.size() - 1) + ")");
  }
  return catalog[branch.index];
}

EvalResult eval(const Params& p, BranchId branch, double x, double tol) {
  if (!(tol > 0.0)) throw DomainError("eval: tolerance must be positive");
  const BranchInfo& info = branch_info(p, branch);
  if (!info.x_domain.contains(x)) {
    throw DomainError("eval: x = " + fmt(x) + " is outside the domain of branch " +
                      std::to_string(branch.index) + " for " + p.to_string() +
                      "; valid x-interval is " + info.x_domain.to_string());
  }
  for (const SingularPoint& sp : info.singular_points) {
    if (x == sp.x) return EvalResult{sp.y, std::abs(forward(p, sp.y) - x), 0, true};
  }

  auto g = [&](double y) { return forward(p, y) - x; };

  // Finite end of the y-range; every branch has at least one singular point.
  const double anchor = info.singular_points.front().y;
  const int sign_anchor = sign_of(g(anchor));
  double far = anchor;

  const Interval& yr = info.y_range;
  const bool toward_hi = anchor == yr.lo;
  const double open_end = toward_hi ? yr.hi : yr.lo;
  double finite_other = std::numeric_limits<double>::quiet_NaN();
  for (const SingularPoint& sp : info.singular_points) {
    if (sp.y != anchor) finite_other = sp.y;
  }

  if (!std::isnan(finite_other)) {
    far = finite_other;
  } else if (open_end == 0.0) {
    far = anchor;
    for (int k = 0;; ++k) {
      far *= 1.0 / 16.0;
      if (std::abs(far) < 1e-300) {
        throw ConvergenceError("eval: x = " + fmt(x) + " is too close to the limit C for the root to be representable");
      }
      if (sign_of(g(far)) != sign_anchor) break;
    }
  } else {
    const double dir = open_end > 0.0 ? 1.0 : -1.0;
    double stride = std::max(1.0, std::abs(anchor));
    for (int k = 0;; ++k) {
      far = anchor + dir * stride;
      const double gv = g(far);
      if (std::isnan(gv)) throw ConvergenceError("eval: forward map is not finite while bracketing");
      if (sign_of(gv) != sign_anchor) break;
      stride *= 2.0;
      if (k > 64) throw ConvergenceError("eval: failed to bracket x = " + fmt(x));
    }
  }

  Bracket br{std::min(anchor, far), std::max(anchor, far), 0};
  br.sign_lo = sign_of(g(br.lo));

  double y = bisect_point(br.lo, br.hi);
  if (std::abs(x) > 10.0 && std::isinf(yr.hi) && p.log_scale() > 0.0) {
    try {
      const double seed = asymptotic(p, x);
      if (seed > br.lo && seed < br.hi) y = seed;
    } catch (const Error&) {
    }
  }

  double best_y = y;
  double best_abs = kInf;
  double prev_abs = kInf;
  bool force_bisect = false;
  int iter = 0;
  for (; iter < 400; ++iter) {
    const double gv = g(y);
    const double gabs = std::abs(gv);
    if (gabs < best_abs) {
      best_abs = gabs;
      best_y = y;
    }
    if (gv == 0.0) break;
    if (sign_of(gv) == br.sign_lo) {
      br.lo = y;
    } else {
      br.hi = y;
    }
    if (br.hi - br.lo <= 2.0 * kEps * std::max(std::abs(br.lo), std::abs(br.hi))) break;

    force_bisect = force_bisect || gabs > 0.5 * prev_abs;
    prev_abs = gabs;

    double next = std::numeric_limits<double>::quiet_NaN();
    if (!force_bisect) {
      const double slope = slope_factor(p, y) * std::exp(y);
      next = y - gv / slope;
    }
    if (!(next > br.lo && next < br.hi)) {
      next = bisect_point(br.lo, br.hi);
      force_bisect = false;
    }
    if (next == br.lo || next == br.hi) break;
    const double step = next - y;
    y = next;
    if (std::abs(step) <= 2.0 * kEps * std::abs(y)) {
      const double gn = std::abs(g(y));
      if (gn < best_abs) {
        best_abs = gn;
        best_y = y;
      }
      break;
    }
  }

  EvalResult result{best_y, best_abs, iter + 1, false};
  if (result.residual > tol * std::max(1.0, std::abs(x))) {
    throw ConvergenceError("eval: residual " + fmt(result.residual) + " exceeds tolerance at x = " + fmt(x));
  }
  return result;
}

double derivative(const Params& p, double y) {
  require_admissible(p, y, "derivative");
  const double a = p.log_coeff();
  const double log_term = a * (y + 1.0) * std::log(p.log_scale() * y);
  const double denom = log_term + y + a + p.shift() + 1.0;
  const double scale = std::max({std::abs(log_term), std::abs(y), std::abs(a + p.shift() + 1.0), 1.0});
  if (std::abs(denom) <= 64.0 * kEps * scale) {
    throw SingularityError("derivative: vertical tangent at y = " + fmt(y) + " (singular point)");
  }
  return std::exp(-y) / denom;
}

double antiderivative(const Params& p, double y) {
  require_admissible(p, y, "antiderivative");
  const double a = p.log_coeff();
  const double c = p.shift();
  const double poly = (y * y - y + 1.0) * a * std::log(p.log_scale() * y) + y * y + (c - 1.0) * y + 1.0 + a - c;
  return std::exp(y) * poly - a * ei(y);
}

double asymptotic(const Params& p, double x) {
  const double a = p.log_coeff();
  const double b = p.log_scale();
  const double c = p.shift();
  if (a + 1.0 == 0.0) throw DomainError("asymptotic: A + 1 must be nonzero");
  const double scale = std::exp(c / (a + 1.0)) / (a + 1.0);
  const double xi = x * scale;
  if (xi < -1.0 / std::exp(1.0)) {
    throw DomainError("asymptotic: W argument " + fmt(xi) + " is below -1/e");
  }
  const double w = lambert_w0(xi);
  if (!(b * w > 0.0)) throw DomainError("asymptotic: B*W(xi) must be positive");
  const double inner = scale * (a * std::log(b * w) + 1.0) + c / x * std::exp(w);
  if (!(inner > 0.0)) throw DomainError("asymptotic: logarithm argument is not positive");
  return w - std::log(inner) - c / (a + 1.0);
}

}  // namespace loglambert
