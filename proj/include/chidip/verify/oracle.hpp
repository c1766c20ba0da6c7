#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "chidip/geometry.hpp"
#include "chidip/medium.hpp"

/// Brute-force mode-sum evaluation of the collective coefficients. The
/// closed forms in collective.hpp are checked against these; nothing in the
/// production path depends on this namespace.
namespace chidip::verify {

/// Gauss-Legendre nodes in mu = cos(theta) times uniform nodes in phi, with the
/// polar axis along the interdipole axis.
struct SphericalQuadratureSpec {
  int n_polar = 64;
  int n_azimuthal = 16;

  /// Throws std::invalid_argument unless both counts are even, n_polar >= 8,
  /// n_azimuthal >= 16 and the total reaches 128 nodes.
  void validate() const;
  SphericalQuadratureSpec refined() const { return {2 * n_polar, 2 * n_azimuthal}; }
};

using ComplexMatrix3 = std::array<std::array<std::complex<double>, 3>, 3>;

/// Polarization dyadic of one plane-wave mode,
///   M = e1 e1 + e2 e2 + s i (e1 e2 - e2 e1),
/// for the right-handed transverse frame (e1, e2, k).
struct ModeDyadicSample {
  Vec3 k_hat;
  Vec3 e1_hat;
  Vec3 e2_hat;
  ComplexMatrix3 m_dyadic{};
};

ModeDyadicSample mode_dyadic(const Vec3& k_hat, const Vec3& e1_hat, const Vec3& e2_hat,
                             Polarization p);

/// left . M . right
std::complex<double> contract(const Vec3& left, const ComplexMatrix3& m, const Vec3& right);

/// When set, the transverse frame at every node is rotated about k by a
/// pseudo-random angle drawn from this seed.
struct FrameOptions {
  std::optional<std::uint64_t> frame_rotation_seed;
};

/// Spherical average  < d2 . M_p(k) . d1  exp(i u k . R) >  by quadrature.
std::complex<double> dyadic_phase_average(const DipoleGeometry& g, Polarization p, double u,
                                          const SphericalQuadratureSpec& q,
                                          const FrameOptions& frame = {});

/// Mode-coupling strength kappa fixed by requiring the x -> 0 limit of the
/// collective decay function for parallel dipoles in an inactive medium to
/// equal n_bar / 2: kappa = 1 / (4 <x . M . x>) (= 3/8 analytically).
double calibration_constant(const SphericalQuadratureSpec& q);

struct OracleResult {
  double value = 0.0;
  double refinement_delta = 0.0;    ///< |refined - base|
  double imaginary_residual = 0.0;  ///< |Im| of the summed angular averages
};

/// On-shell (delta-function) part of the exchange coefficient:
///   F1 = sum_p kappa n_p Re < d2 . M_p . d1 e^{i n_p x k.R} >.
/// Evaluated with q and q.refined(); throws OracleDivergence when they
/// differ by more than `tolerance`.
OracleResult f1_oracle(double x, const MediumChirality& m, const DipoleGeometry& g,
                       const SphericalQuadratureSpec& q = {}, double tolerance = 1e-10,
                       const FrameOptions& frame = {});

/// Radial grid for the off-shell part. The mode integral over xi = k / k0 grows
/// like xi at large xi and is defined by Abel summation; it is evaluated with a
/// C-infinity window chi(xi / Lambda) equal to 1 below flat_fraction * Lambda
/// and 0 above Lambda, where Lambda = window_phase / (n x). The window error
/// falls faster than any power of window_phase.
struct RadialSpec {
  double window_phase = 400.0;
  double flat_fraction = 0.25;
  double pole_half_width = 0.5;  ///< half width of the mirrored grid around xi = 1
  double panel_phase = 1.5;      ///< largest phase advance n x dxi per panel
  int nodes_per_panel = 12;
  double tolerance = 1e-6;  ///< allowed |refined - base| / max(|value|, 0.01)

  RadialSpec refined() const;
};

/// Off-shell part of the exchange coefficient:
///   F2 = sum_p (kappa n_p / pi) P int_0^inf xi^3 S_p(xi) [1/(xi - 1) + 1/(xi + 1)] dxi,
/// S_p(xi) = Re < d2 . M_p . d1 e^{i n_p xi x k.R} >. The resonant 1/(xi - 1)
/// branch is a principal value taken on a grid mirrored about xi = 1.
OracleResult f2_oracle(double x, const MediumChirality& m, const DipoleGeometry& g,
                       const SphericalQuadratureSpec& q = {}, const RadialSpec& radial = {});

/// Smooth window used by f2_oracle: 1 for t <= flat, 0 for t >= 1.
double radial_window(double t, double flat);

}  // namespace chidip::verify
