#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace chidip::verify {

/// Neumaier compensated accumulator. Summation order is the call order, so a
/// fixed sequence of additions gives bit-identical results.
template <class T>
class CompensatedSum {
 public:
  void add(T v) {
    const T t = sum_ + v;
    if (magnitude(sum_) >= magnitude(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  static double magnitude(double v) { return std::abs(v); }
  template <class U>
  static double magnitude(const U& v) {
    return std::abs(v.real()) + std::abs(v.imag());
  }
  T sum_{};
  T comp_{};
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

struct QuadratureResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod integration over [a, b].
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol);

}  // namespace chidip::verify
