#pragma once

#include <complex>
#include <optional>

#include "chidip/geometry.hpp"
#include "chidip/medium.hpp"

namespace chidip {

/// Rate coefficients in units of Gamma0. Real parts damp amplitudes,
/// imaginary parts shift levels. The imaginary part of a_l is the
/// renormalized single-dipole Lamb shift (zero when no cutoff is given).
struct ComplexRateCoefficients {
  std::complex<double> a_l;
  std::complex<double> a_t;
};

/// Dimensionless Bethe cutoff m_e c / (hbar k0). Must exceed 1.
class LambCutoff {
 public:
  explicit LambCutoff(double lambda_cutoff);
  double value() const { return lambda_; }

 private:
  double lambda_;
};

struct CollectiveSpectrum {
  double gamma_plus = 0.0;   ///< DES amplitude damping rate / Gamma0
  double gamma_minus = 0.0;  ///< DEAS amplitude damping rate / Gamma0
  double delta_plus = 0.0;   ///< DES level shift / Gamma0 (Lamb part included if given)
  double delta_minus = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double delta = 0.0;  ///< delta_plus - delta_minus = 2 f2
};

/// Arguments below this value use the Taylor series of the collective
/// decay brackets; the direct trigonometric form cancels catastrophically.
inline constexpr double kBracketSeriesLimit = 0.05;

/// The three radial families of the collective decay function, as functions
/// of y = n k0 R. With j_l the spherical Bessel functions:
///   transverse(y) = sin y/y + cos y/y^2 - sin y/y^3      = j0 - j1/y
///   axial(y)      = sin y/y + 3 cos y/y^2 - 3 sin y/y^3  = -j2
///   chiral(y)     = cos y/y - sin y/y^2                  = -j1
struct DecayBrackets {
  double transverse = 0.0;
  double axial = 0.0;
  double chiral = 0.0;
};

DecayBrackets decay_brackets(double y);
DecayBrackets decay_brackets_series(double y);
DecayBrackets decay_brackets_direct(double y);

/// F2 split by origin: the dyadic (a, b) part, the trigonometric chiral
/// part and the chiral part carried by the auxiliary integrals I1, I2.
struct F2Terms {
  double symmetric = 0.0;
  double chiral_trig = 0.0;
  double chiral_aux = 0.0;
  double total() const { return symmetric + chiral_trig + chiral_aux; }
};

/// Collective decay function F1 (real part of -A_T). Throws InvalidSeparation for x <= 0.
double f1(double x, const MediumChirality& m, const GeometryInvariants& g);

/// Collective shift function F2 (imaginary part of A_T).
double f2(double x, const MediumChirality& m, const GeometryInvariants& g);
F2Terms f2_terms(double x, const MediumChirality& m, const GeometryInvariants& g);

/// A_T / Gamma0 = -F1 + i F2.
std::complex<double> a_t(double x, const MediumChirality& m, const GeometryInvariants& g);

/// Re(A_L) / Gamma0 = -n_bar / 2.
double a_l_damping(const MediumChirality& m);

/// Renormalized single-dipole Lamb shift n_bar ln(Lambda) / (2 pi), in units of Gamma0.
double lamb_shift(const MediumChirality& m, const LambCutoff& cutoff);

ComplexRateCoefficients rate_coefficients(double x, const MediumChirality& m,
                                          const GeometryInvariants& g,
                                          const std::optional<LambCutoff>& cutoff = std::nullopt);

/// Damping rates and level shifts of the symmetric and antisymmetric states.
/// Without a cutoff the shifts contain only the +-F2 part.
CollectiveSpectrum collective_spectrum(double x, const MediumChirality& m,
                                       const GeometryInvariants& g,
                                       const std::optional<LambCutoff>& cutoff = std::nullopt);

}  // namespace chidip
