#include "chidip/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chidip/error.hpp"

namespace chidip {
namespace {

constexpr double kFlushExponent = -700.0;

// Rounding slack for the Dicke limit, where Re(a_l) + |Re(a_t)| is zero
// analytically and a few ulps either side numerically.
constexpr double kRateSlack = 1e-12;

}  // namespace

std::complex<double> damped_exp(std::complex<double> z) {
  if (z.real() < kFlushExponent) return {0.0, 0.0};
  return std::exp(z);
}

AmplitudeTrajectory evolve(std::complex<double> a_l, std::complex<double> a_t,
                           std::span<const double> times) {
  const double growth = a_l.real() + std::abs(a_t.real());
  if (!std::isfinite(growth) ||
      growth > kRateSlack * std::max(1.0, std::abs(a_l.real()))) {
    throw UnphysicalRates("rate coefficients describe a growing collective state");
  }
  AmplitudeTrajectory tr;
  const std::size_t n = times.size();
  tr.times.assign(times.begin(), times.end());
  tr.c1.resize(n);
  tr.c2.resize(n);
  tr.c_plus.resize(n);
  tr.c_minus.resize(n);
  tr.e_int.resize(n);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = times[i];
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("times must be >= 0");
    if (i > 0 && t < times[i - 1]) throw std::invalid_argument("times must be sorted");
    const auto e_plus = damped_exp((a_l + a_t) * t);
    const auto e_minus = damped_exp((a_l - a_t) * t);
    tr.c1[i] = 0.5 * (e_plus + e_minus);
    tr.c2[i] = 0.5 * (e_plus - e_minus);
    tr.c_plus[i] = inv_sqrt2 * e_plus;
    tr.c_minus[i] = inv_sqrt2 * e_minus;
    tr.e_int[i] = interaction_energy(a_t, tr.c_plus[i], tr.c_minus[i]);
  }
  return tr;
}

double interaction_energy(std::complex<double> a_t, std::complex<double> c_plus,
                          std::complex<double> c_minus) {
  return -2.0 * a_t.imag() * (std::norm(c_plus) - std::norm(c_minus));
}

}  // namespace chidip
