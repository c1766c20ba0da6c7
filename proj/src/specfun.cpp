#include "chidip/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "chidip/error.hpp"

namespace chidip {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kSeriesLimit = 4.0;
// Above this argument the Laplace-transform asymptotic series of I1/I2 is
// accurate to better than 1e-15 relative and avoids the 1/u^k - g cancellation.
constexpr double kAsymptoticLimit = 40.0;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " requires a positive finite argument");
  }
}

SinCosIntegrals series(double x) {
  // Si = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
  // Ci = gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
  double si = 0.0;
  double ci = 0.0;
  double term = x;  // x^(2k+1)/(2k+1)! with sign
  for (int k = 0; k < 60; ++k) {
    const double si_term = term / (2 * k + 1);
    si += si_term;
    // advance to the even power: x^(2k+2)/(2k+2)!
    const double even = -term * x / (2 * k + 2);
    const double ci_term = even / (2 * k + 2);
    ci += ci_term;
    term = even * x / (2 * k + 3);
    if (std::abs(si_term) < kEps * std::abs(si) && std::abs(ci_term) < kEps * std::abs(ci) &&
        k > 2) {
      break;
    }
  }
  ci += std::numbers::egamma + std::log(x);
  return {si, ci};
}

// Modified Lentz evaluation of e^z E1(z) at z = i x; the real part is g(x),
// the imaginary part is -f(x).
std::complex<double> exp_e1_imag(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 10000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  return h;
}

}  // namespace

SinCosIntegrals sin_cos_integrals(double x) {
  require_positive(x, "sin_cos_integrals");
  if (x <= kSeriesLimit) return series(x);
  const auto h = exp_e1_imag(x);
  // E1(ix) = e^{-ix} h = -Ci(x) + i (Si(x) - pi/2)
  const auto e1 = std::complex<double>(std::cos(x), -std::sin(x)) * h;
  return {kHalfPi + e1.imag(), -e1.real()};
}

AuxiliaryFG auxiliary_fg(double x) {
  require_positive(x, "auxiliary_fg");
  if (x <= kSeriesLimit) {
    const auto [si, ci] = series(x);
    const double s = std::sin(x);
    const double c = std::cos(x);
    return {ci * s - (si - kHalfPi) * c, -ci * c - (si - kHalfPi) * s};
  }
  const auto h = exp_e1_imag(x);
  return {-h.imag(), h.real()};
}

namespace {

// sum_k (-1)^k (2k + p)! / u^(2k + p + 1), truncated before the smallest term.
AuxIntegralResult laplace_asymptotic(double u, int p) {
  double term = 1.0 / u;
  for (int j = 1; j <= p; ++j) term *= j / u;
  double sum = 0.0;
  double last = std::abs(term);
  for (int k = 0; k < 200; ++k) {
    sum += term;
    const double next = -term * (2 * k + p + 1) * (2 * k + p + 2) / (u * u);
    if (std::abs(next) >= last || std::abs(next) < kEps * std::abs(sum) * 1e-3) {
      last = std::abs(next);
      break;
    }
    last = std::abs(next);
    term = next;
  }
  return {sum, last + 4.0 * kEps * std::abs(sum)};
}

}  // namespace

AuxIntegralResult aux_i1(double u) {
  require_positive(u, "aux_i1");
  if (u >= kAsymptoticLimit) return laplace_asymptotic(u, 3);
  const double lead = 1.0 / (u * u);
  const double g = auxiliary_fg(u).g;
  const double value = lead - g;
  return {value, 8.0 * kEps * (std::abs(lead) + std::abs(g))};
}

AuxIntegralResult aux_i2(double u) {
  require_positive(u, "aux_i2");
  if (u >= kAsymptoticLimit) return laplace_asymptotic(u, 2);
  const double lead = 1.0 / u;
  const double f = auxiliary_fg(u).f;
  const double value = lead - f;
  return {value, 8.0 * kEps * (std::abs(lead) + std::abs(f))};
}

}  // namespace chidip
