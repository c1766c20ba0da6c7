#pragma once

namespace chidip {

struct AuxIntegralResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

struct SinCosIntegrals {
  double si = 0.0;
  double ci = 0.0;
};

/// Si(x) = int_0^x sin t / t dt and Ci(x) = -int_x^inf cos t / t dt, x > 0.
/// Power series up to x = 4, continued fraction for E1(ix) beyond.
SinCosIntegrals sin_cos_integrals(double x);

/// Auxiliary functions of the sine/cosine integrals,
///   f(x) = Ci(x) sin x - (Si(x) - pi/2) cos x = int_0^inf exp(-x t) / (1 + t^2) dt,
///   g(x) = -Ci(x) cos x - (Si(x) - pi/2) sin x = int_0^inf t exp(-x t) / (1 + t^2) dt.
struct AuxiliaryFG {
  double f = 0.0;
  double g = 0.0;
};

AuxiliaryFG auxiliary_fg(double x);

/// I1(u) = int_0^inf xi^3 exp(-xi u) / (xi^2 + 1) dxi = 1/u^2 - g(u).
AuxIntegralResult aux_i1(double u);

/// I2(u) = int_0^inf xi^2 exp(-xi u) / (xi^2 + 1) dxi = 1/u - f(u).
AuxIntegralResult aux_i2(double u);

}  // namespace chidip
