#include "chidip/verify/aux_quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "chidip/error.hpp"
#include "chidip/verify/quadrature.hpp"

namespace chidip::verify {
namespace {

constexpr double kRelTol = 1e-12;

AuxIntegralResult integrate_aux(double u, int power) {
  if (!(u > 0.0)) throw DomainError("auxiliary integral requires u > 0");
  const double xi_max = std::max(50.0 / u, 50.0);
  const auto integrand = [u, power](double xi) {
    return std::pow(xi, power) * std::exp(-xi * u) / (xi * xi + 1.0);
  };
  // Split at the peak of the exponential factor so the adaptive rule sees
  // the structure near xi ~ 1/u.
  const double knee = std::min(xi_max, std::max(1.0, power / u));
  const auto lo = adaptive_integrate(integrand, 0.0, knee, kRelTol);
  const auto hi = adaptive_integrate(integrand, knee, xi_max, kRelTol);
  return {lo.value + hi.value, lo.est_abs_error + hi.est_abs_error};
}

}  // namespace

AuxIntegralResult aux_i1_quadrature(double u) { return integrate_aux(u, 3); }
AuxIntegralResult aux_i2_quadrature(double u) { return integrate_aux(u, 2); }

double sine_integral_quadrature(double x) {
  const auto sinc = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
  return adaptive_integrate(sinc, 0.0, x, 1e-13).value;
}

}  // namespace chidip::verify
