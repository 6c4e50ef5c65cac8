#pragma once

#include <cstddef>
#include <vector>

namespace loglambert::detail {

// Truncated power series c[0] + c[1] t + ... + c[order] t^order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1, 0.0) {}
  PowerSeries(std::size_t order, std::vector<double> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1, 0.0); }

  std::size_t order() const { return c_.size() - 1; }
  double& operator[](std::size_t k) { return c_[k]; }
  double operator[](std::size_t k) const { return c_[k]; }
  const std::vector<double>& coeffs() const { return c_; }

  PowerSeries& operator+=(const PowerSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  PowerSeries& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; i + j < out.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    return out;
  }

  // 1 / s; requires s[0] != 0.
  PowerSeries reciprocal() const {
    PowerSeries out(order());
    out.c_[0] = 1.0 / c_[0];
    for (std::size_t n = 1; n < c_.size(); ++n) {
      double acc = 0.0;
      for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
      out.c_[n] = -acc / c_[0];
    }
    return out;
  }

  PowerSeries pow(int n) const {
    PowerSeries out(order());
    out.c_[0] = 1.0;
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
  }

 private:
  std::vector<double> c_;
};

}  // namespace loglambert::detail
