#pragma once

#include "chidip/specfun.hpp"

namespace chidip::verify {

/// Direct quadrature of the defining integrals of I1 and I2, truncated at
/// xi_max = max(50/u, 50). Independent of the Si/Ci closed forms.
AuxIntegralResult aux_i1_quadrature(double u);
AuxIntegralResult aux_i2_quadrature(double u);

/// Si(x) by quadrature of sin t / t.
double sine_integral_quadrature(double x);

}  // namespace chidip::verify
